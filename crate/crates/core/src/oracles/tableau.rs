use num_bigint::BigInt;

use super::OracleError;
use crate::algebra::IntPoly;
use crate::partition::Partition;

/// A semistandard tableau in English notation, entries starting at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].len() <= w[0].len() && w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        rows_ok && cols_ok
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn charge(&self) -> usize {
        word_charge(&self.reading_word())
    }
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are extracted by scanning leftwards cyclically for
/// `1, 2, ...`; the index rises by one each time the scan wraps.
pub fn word_charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().copied().map(Some).collect();
    let mut total = 0;
    while letters.iter().any(Option::is_some) {
        let n = letters.len();
        let Some(mut pos) = (0..n).rev().find(|&i| letters[i] == Some(1)) else {
            break;
        };
        letters[pos] = None;
        let mut index = 0;
        let mut letter = 2;
        loop {
            let left = (0..pos).rev().find(|&i| letters[i] == Some(letter));
            let i = match left {
                Some(i) => i,
                None => match (pos + 1..n).rev().find(|&i| letters[i] == Some(letter)) {
                    Some(i) => {
                        index += 1;
                        i
                    }
                    None => break,
                },
            };
            total += index;
            letters[i] = None;
            pos = i;
            letter += 1;
        }
    }
    total
}

/// All semistandard tableaux of shape `shape` and content `content`.
pub fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.size() {
        return out;
    }
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|_| Vec::new()).collect();
    place(shape, content.parts(), 0, &mut rows, &mut out);
    out
}

// Places the copies of letter `k + 1` as a horizontal strip.
fn place(shape: &Partition, content: &[usize], k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if k == content.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let limits: Vec<usize> = (0..rows.len())
        .map(|i| {
            let above = if i == 0 { shape.part(0) } else { rows[i - 1].len() };
            above.min(shape.part(i))
        })
        .collect();
    strip(shape, content, k, 0, content[k], &limits, rows, out);
}

#[allow(clippy::too_many_arguments)]
fn strip(
    shape: &Partition,
    content: &[usize],
    k: usize,
    row: usize,
    left: usize,
    limits: &[usize],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if left == 0 {
        place(shape, content, k + 1, rows, out);
        return;
    }
    if row == rows.len() {
        return;
    }
    // the limit of row i uses the length of row i-1 before this strip
    let room = limits[row].saturating_sub(rows[row].len());
    for take in (0..=room.min(left)).rev() {
        rows[row].extend(std::iter::repeat_n(k + 1, take));
        strip(shape, content, k, row + 1, left - take, limits, rows, out);
        let len = rows[row].len();
        rows[row].truncate(len - take);
    }
}

/// `K_{λμ}(t) = Σ_T t^{charge(T)}` over tableaux of shape `λ`, content `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<IntPoly, OracleError> {
    if lambda.size() != mu.size() {
        return Err(OracleError::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in semistandard_tableaux(lambda, mu) {
        let c = t.charge();
        if coeffs.len() <= c {
            coeffs.resize(c + 1, BigInt::from(0));
        }
        coeffs[c] += 1;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}
