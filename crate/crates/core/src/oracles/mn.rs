use super::OracleError;
use crate::partition::Partition;

/// `χ^λ_ρ` by removing rim hooks directly from the Young diagram.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64, OracleError> {
    if lambda.size() != rho.size() {
        return Err(OracleError::SizeMismatch { left: lambda.size(), right: rho.size() });
    }
    Ok(rim_hooks(lambda.parts().to_vec(), rho.parts()))
}

fn rim_hooks(shape: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let cols = conjugate(&shape);
    let mut total = 0;
    for (i, &row) in shape.iter().enumerate() {
        for c in 0..row {
            let arm = row - c - 1;
            let leg = cols[c] - i - 1;
            if arm + leg + 1 != k {
                continue;
            }
            let mut next = shape.clone();
            for r in i..i + leg {
                next[r] = shape[r + 1] - 1;
            }
            next[i + leg] = c;
            next.retain(|&p| p > 0);
            let sign = if leg.is_multiple_of(2) { 1 } else { -1 };
            total += sign * rim_hooks(next, rest);
        }
    }
    total
}

fn conjugate(shape: &[usize]) -> Vec<usize> {
    let width = shape.first().copied().unwrap_or(0);
    (0..width).map(|c| shape.iter().filter(|&&p| p > c).count()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p("21"), &p("111")).unwrap(), 2);
        assert_eq!(mn_character(&p("21"), &p("3")).unwrap(), -1);
        assert_eq!(mn_character(&p("22"), &p("4")).unwrap(), 0);
        assert_eq!(mn_character(&p("32"), &p("221")).unwrap(), 1);
        assert!(mn_character(&p("2"), &p("111")).is_err());
        for n in 1..=5 {
            for rho in Partition::all(n) {
                let trivial = Partition::new(vec![n]);
                let sign = Partition::new(vec![1; n]);
                assert_eq!(mn_character(&trivial, &rho).unwrap(), 1);
                assert_eq!(mn_character(&sign, &rho).unwrap(), rho.sign());
            }
        }
    }

    #[test]
    fn first_orthogonality() {
        for n in 1..=5 {
            let parts = Partition::all(n);
            let order: u64 = (1..=n as u64).product();
            for a in &parts {
                for b in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|rho| {
                            let size = (order / rho.z()) as i64;
                            size * mn_character(a, rho).unwrap() * mn_character(b, rho).unwrap()
                        })
                        .sum();
                    assert_eq!(s, if a == b { order as i64 } else { 0 });
                }
            }
        }
    }
}
