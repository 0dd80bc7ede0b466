//! Rankers, courses and the ordered item lists they publish.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

macro_rules! id_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl From<&str> for $name {
            fn from(id: &str) -> Self {
                Self(id.into())
            }
        }

        impl From<String> for $name {
            fn from(id: String) -> Self {
                Self(id)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }
    };
}

id_newtype!(
    /// Opaque ranker token such as `U1`.
    RankerId
);
id_newtype!(
    /// Opaque item token such as `DS1`. Compared case-sensitively.
    ItemId
);

/// Rankers in preference order: index 0 is the best-ranked source.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RankerRoster {
    pub rankers: Vec<RankerId>,
}

impl RankerRoster {
    pub fn new<I, R>(rankers: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: Into<RankerId>,
    {
        Self {
            rankers: rankers.into_iter().map(Into::into).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rankers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rankers.is_empty()
    }

    pub fn contains(&self, ranker: &str) -> bool {
        self.rankers.iter().any(|r| r.as_str() == ranker)
    }
}

/// Every ranker's ordered list for one course.
///
/// A ranker missing from `lists` ranked nothing for the course; this is the
/// same as mapping it to an empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CourseRanking {
    pub course: String,
    pub lists: BTreeMap<RankerId, Vec<ItemId>>,
}

impl CourseRanking {
    pub fn new(course: impl Into<String>) -> Self {
        Self {
            course: course.into(),
            lists: BTreeMap::new(),
        }
    }

    /// Builder-style insertion of one ranker's list. Empty lists are not stored.
    pub fn with_list<R, I, T>(mut self, ranker: R, items: I) -> Self
    where
        R: Into<RankerId>,
        I: IntoIterator<Item = T>,
        T: Into<ItemId>,
    {
        self.set_list(ranker, items);
        self
    }

    pub fn set_list<R, I, T>(&mut self, ranker: R, items: I)
    where
        R: Into<RankerId>,
        I: IntoIterator<Item = T>,
        T: Into<ItemId>,
    {
        let ranker = ranker.into();
        let items: Vec<ItemId> = items.into_iter().map(Into::into).collect();
        if items.is_empty() {
            self.lists.remove(&ranker);
        } else {
            self.lists.insert(ranker, items);
        }
    }

    /// The ranker's list, empty when the ranker ranked nothing.
    pub fn list(&self, ranker: &str) -> &[ItemId] {
        self.lists.get(ranker).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Union of every list, in order of first appearance when rankers are
    /// scanned in roster order and each list from its first position.
    pub fn distinct_items(&self, roster: &RankerRoster) -> Vec<ItemId> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for ranker in &roster.rankers {
            for item in self.list(ranker.as_str()) {
                if seen.insert(item.as_str()) {
                    out.push(item.clone());
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RankingDataset {
    pub roster: RankerRoster,
    pub courses: Vec<CourseRanking>,
}

impl RankingDataset {
    pub fn course(&self, name: &str) -> Option<&CourseRanking> {
        self.courses.iter().find(|c| c.course == name)
    }

    /// Every broken structural invariant; empty iff the dataset is valid.
    pub fn validate(&self) -> Vec<Violation> {
        validate_dataset(self)
    }
}

/// Reference ("expert") ranking for one course.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroundTruth {
    pub course: String,
    pub ranking: Vec<ItemId>,
}

impl GroundTruth {
    pub fn new<I, T>(course: impl Into<String>, ranking: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<ItemId>,
    {
        Self {
            course: course.into(),
            ranking: ranking.into_iter().map(Into::into).collect(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for item in &self.ranking {
            if item.as_str().is_empty() {
                out.push(Violation::EmptyItemId {
                    course: self.course.clone(),
                    ranker: None,
                });
            } else if !seen.insert(item.as_str()) {
                out.push(Violation::DuplicateItem {
                    course: self.course.clone(),
                    ranker: None,
                    item: item.clone(),
                });
            }
        }
        out
    }
}

/// One broken dataset invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyRoster,
    EmptyRankerId,
    DuplicateRanker(RankerId),
    DuplicateCourse(String),
    UnknownRanker {
        course: String,
        ranker: RankerId,
    },
    /// `ranker` is `None` for a ground-truth list.
    DuplicateItem {
        course: String,
        ranker: Option<RankerId>,
        item: ItemId,
    },
    EmptyItemId {
        course: String,
        ranker: Option<RankerId>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ranker: &Option<RankerId>| match ranker {
            Some(r) => alloc::format!("ranker {r}"),
            None => String::from("ground truth"),
        };
        match self {
            Violation::EmptyRoster => write!(f, "roster is empty"),
            Violation::EmptyRankerId => write!(f, "roster contains an empty ranker id"),
            Violation::DuplicateRanker(r) => {
                write!(f, "ranker {r} appears more than once in the roster")
            }
            Violation::DuplicateCourse(c) => write!(f, "course {c:?} appears more than once"),
            Violation::UnknownRanker { course, ranker } => {
                write!(f, "course {course:?}: ranker {ranker} is not in the roster")
            }
            Violation::DuplicateItem {
                course,
                ranker,
                item,
            } => {
                write!(
                    f,
                    "course {course:?}: {} lists item {item} more than once",
                    list(ranker)
                )
            }
            Violation::EmptyItemId { course, ranker } => {
                write!(
                    f,
                    "course {course:?}: {} contains an empty item id",
                    list(ranker)
                )
            }
        }
    }
}

/// Checks every structural invariant of `dataset`, reporting each violation
/// instead of stopping at the first.
pub fn validate_dataset(dataset: &RankingDataset) -> Vec<Violation> {
    let mut out = Vec::new();
    if dataset.roster.is_empty() {
        out.push(Violation::EmptyRoster);
    }
    let mut rankers = BTreeSet::new();
    for r in &dataset.roster.rankers {
        if r.as_str().is_empty() {
            out.push(Violation::EmptyRankerId);
        } else if !rankers.insert(r.as_str()) {
            out.push(Violation::DuplicateRanker(r.clone()));
        }
    }

    let mut courses = BTreeSet::new();
    for course in &dataset.courses {
        if !courses.insert(course.course.as_str()) {
            out.push(Violation::DuplicateCourse(course.course.clone()));
        }
        for (ranker, items) in &course.lists {
            if !rankers.contains(ranker.as_str()) {
                out.push(Violation::UnknownRanker {
                    course: course.course.clone(),
                    ranker: ranker.clone(),
                });
            }
            let mut seen = BTreeSet::new();
            for item in items {
                if item.as_str().is_empty() {
                    out.push(Violation::EmptyItemId {
                        course: course.course.clone(),
                        ranker: Some(ranker.clone()),
                    });
                } else if !seen.insert(item.as_str()) {
                    out.push(Violation::DuplicateItem {
                        course: course.course.clone(),
                        ranker: Some(ranker.clone()),
                        item: item.clone(),
                    });
                }
            }
        }
    }
    out
}
