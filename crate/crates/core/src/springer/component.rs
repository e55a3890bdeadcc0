use std::fmt;
use std::str::FromStr;

/// Component groups `A(u)` that occur in the supported packs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentGroup {
    Trivial,
    /// Cyclic of order 2, 3 or 4.
    Cyclic(u32),
    S3,
}

impl ComponentGroup {
    pub fn order(self) -> u64 {
        match self {
            ComponentGroup::Trivial => 1,
            ComponentGroup::Cyclic(n) => u64::from(n),
            ComponentGroup::S3 => 6,
        }
    }

    pub fn class_labels(self) -> Vec<String> {
        match self {
            ComponentGroup::Trivial => vec!["1".into()],
            ComponentGroup::Cyclic(n) => (0..n)
                .map(|k| match k {
                    0 => "1".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g{k}"),
                })
                .collect(),
            ComponentGroup::S3 => vec!["1".into(), "(12)".into(), "(123)".into()],
        }
    }

    pub fn class_sizes(self) -> Vec<u64> {
        match self {
            ComponentGroup::Trivial => vec![1],
            ComponentGroup::Cyclic(n) => vec![1; n as usize],
            ComponentGroup::S3 => vec![1, 3, 2],
        }
    }

    /// Irreducible characters with integer values, in class-label order.
    /// Non-rational characters of cyclic groups are excluded because
    /// Y-functions must be integer valued.
    pub fn rational_characters(self) -> Vec<Vec<i64>> {
        match self {
            ComponentGroup::Trivial => vec![vec![1]],
            ComponentGroup::Cyclic(2) => vec![vec![1, 1], vec![1, -1]],
            ComponentGroup::Cyclic(3) => vec![vec![1, 1, 1]],
            ComponentGroup::Cyclic(4) => vec![vec![1, 1, 1, 1], vec![1, -1, 1, -1]],
            ComponentGroup::Cyclic(_) => vec![],
            ComponentGroup::S3 => vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]],
        }
    }

    /// Class of `a^r` for `a` in class `c`.
    pub fn power_class(self, c: usize, r: u64) -> usize {
        match self {
            ComponentGroup::Trivial => 0,
            ComponentGroup::Cyclic(n) => ((c as u64 * r) % u64::from(n)) as usize,
            ComponentGroup::S3 => match c {
                0 => 0,
                1 if r.is_multiple_of(2) => 0,
                2 if r.is_multiple_of(3) => 0,
                other => other,
            },
        }
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentGroup::Trivial => write!(f, "1"),
            ComponentGroup::Cyclic(n) => write!(f, "Z{n}"),
            ComponentGroup::S3 => write!(f, "S3"),
        }
    }
}

impl FromStr for ComponentGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1" => Ok(ComponentGroup::Trivial),
            "S3" => Ok(ComponentGroup::S3),
            _ => match s.strip_prefix('Z').and_then(|n| n.parse::<u32>().ok()) {
                Some(n @ 2..=4) => Ok(ComponentGroup::Cyclic(n)),
                _ => Err(format!("unsupported component group {s:?}")),
            },
        }
    }
}
