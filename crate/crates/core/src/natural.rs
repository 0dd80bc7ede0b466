use core::cmp::Ordering;

/// Compares two identifiers so that embedded digit runs order numerically:
/// `DS4 < DS12 < DS15`, `U2 < U10`.
///
/// Non-digit runs compare byte-wise. When two ids are equal under this order
/// (`DS01` vs `DS1`) the plain byte order decides, so the result is total and
/// consistent with `Eq`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(cx), Some(cy)) => {
                if cx.is_ascii_digit() && cy.is_ascii_digit() {
                    let (dx, rx) = split_run(x, true);
                    let (dy, ry) = split_run(y, true);
                    let ord = cmp_digits(dx, dy);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    x = rx;
                    y = ry;
                } else {
                    let (tx, rx) = split_run(x, false);
                    let (ty, ry) = split_run(y, false);
                    // a digit run sorts before text at the same offset
                    let ord = match (tx.is_empty(), ty.is_empty()) {
                        (true, false) => Ordering::Less,
                        (false, true) => Ordering::Greater,
                        _ => tx.cmp(ty),
                    };
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    x = rx;
                    y = ry;
                }
            }
        }
    }
}

fn split_run(s: &[u8], digits: bool) -> (&[u8], &[u8]) {
    let end = s
        .iter()
        .position(|c| c.is_ascii_digit() != digits)
        .unwrap_or(s.len());
    s.split_at(end)
}

fn cmp_digits(a: &[u8], b: &[u8]) -> Ordering {
    let trim = |s: &'_ [u8]| -> usize { s.iter().take_while(|&&c| c == b'0').count() };
    let (a, b) = (&a[trim(a)..], &b[trim(b)..]);
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn numeric_suffixes_order_by_value() {
        assert_eq!(natural_cmp("DS4", "DS12"), Ordering::Less);
        assert_eq!(natural_cmp("DS12", "DS15"), Ordering::Less);
        assert_eq!(natural_cmp("DS15", "DS4"), Ordering::Greater);
        assert_eq!(natural_cmp("U10", "U9"), Ordering::Greater);
    }

    #[test]
    fn leading_zeros_fall_back_to_bytes() {
        assert_eq!(natural_cmp("DS01", "DS1"), "DS01".cmp("DS1"));
        assert_eq!(natural_cmp("DS1", "DS1"), Ordering::Equal);
    }

    #[test]
    fn huge_digit_runs_do_not_overflow() {
        assert_eq!(
            natural_cmp("x99999999999999999999999", "x100000000000000000000000"),
            Ordering::Less
        );
    }

    #[test]
    fn sorts_table_codes() {
        let mut ids: Vec<&str> = vec!["DS15", "DS2", "DS12", "DS4", "A", "DS"];
        ids.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(ids, ["A", "DS", "DS2", "DS4", "DS12", "DS15"]);
    }
}
