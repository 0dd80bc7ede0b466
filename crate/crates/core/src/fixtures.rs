//! Bundled "Data Structure" course: seven rankers (universities in ranking
//! order) and the textbooks each one prescribes, in the order prescribed.

use alloc::vec;

use crate::dataset::{CourseRanking, RankerRoster, RankingDataset};

pub const DATA_STRUCTURES_COURSE: &str = "Data Structure";

/// Ranker tokens with the institution each one stands for, best first.
pub const RANKERS: [(&str, &str); 7] = [
    ("U1", "IIT Bombay"),
    ("U2", "IIT Delhi"),
    ("U3", "IIT Kanpur"),
    ("U4", "IIT Madras"),
    ("U5", "IISc Bangalore"),
    ("U6", "IIT Kharagpur"),
    ("U7", "IIT Roorkee"),
];

pub fn roster() -> RankerRoster {
    RankerRoster::new(RANKERS.iter().map(|(id, _)| *id))
}

pub fn data_structures_course() -> CourseRanking {
    CourseRanking::new(DATA_STRUCTURES_COURSE)
        .with_list("U1", ["DS1"])
        .with_list("U2", ["DS2", "DS3"])
        .with_list("U3", ["DS4", "DS5", "DS6", "DS7", "DS8"])
        .with_list("U4", ["DS9", "DS1", "DS10", "DS11"])
        .with_list("U5", ["DS12", "DS8", "DS13", "DS3"])
        .with_list("U6", ["DS9", "DS14", "DS10"])
        .with_list("U7", ["DS15", "DS16"])
}

pub fn data_structures() -> RankingDataset {
    RankingDataset {
        roster: roster(),
        courses: vec![data_structures_course()],
    }
}
