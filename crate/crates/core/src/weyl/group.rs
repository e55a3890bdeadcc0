use std::collections::{HashMap, VecDeque};

use super::datum::{finite_order_inverse, mat_mul, mat_vec, CartanDatum, LatticeMatrix};
use super::WeylError;

/// One element of `W`, stored as a permutation of the root list.
#[derive(Clone, Debug)]
pub struct Element {
    /// `perm[i]` is the index of `w(β_i)`.
    pub perm: Vec<usize>,
    /// A reduced word in the simple reflections (0-based generator indices).
    pub word: Vec<usize>,
    /// Action on the cocharacter lattice.
    pub matrix: LatticeMatrix,
    pub length: usize,
}

/// A γ-conjugacy class `{x^{-1} w γ(x)}`.
#[derive(Clone, Debug)]
pub struct GammaClass {
    pub rep: usize,
    pub members: Vec<usize>,
    pub label: String,
}

/// The Weyl group of a datum with its γ-action and γ-classes.
///
/// Elements are enumerated breadth-first from the identity, multiplying by
/// the simple reflections on the right in generator order. The resulting
/// index is the canonical element order used by data packs.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: CartanDatum,
    roots: Vec<Vec<i64>>,
    positive: Vec<bool>,
    elements: Vec<Element>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    gamma: Vec<usize>,
    classes: Vec<GammaClass>,
    class_of: Vec<usize>,
}

fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|g| format!("s{}", g + 1)).collect()
    }
}

impl WeylGroup {
    pub fn new(datum: CartanDatum) -> Result<Self, WeylError> {
        datum.validate()?;
        let r = datum.rank;

        // coroots by closure, tracked in the simple-coroot basis for positivity
        let mut expansions: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let mut k = 0;
        while k < expansions.len() {
            for i in 0..r {
                let c = &expansions[k];
                let pairing: i64 = (0..r).map(|j| c[j] * datum.cartan[j][i]).sum();
                let mut img = c.clone();
                img[i] -= pairing;
                if !expansions.contains(&img) {
                    expansions.push(img);
                }
            }
            k += 1;
        }
        let positive: Vec<bool> = expansions.iter().map(|c| c.iter().all(|&x| x >= 0)).collect();
        let roots: Vec<Vec<i64>> = expansions
            .iter()
            .map(|c| {
                (0..datum.lattice_rank)
                    .map(|m| (0..r).map(|j| c[j] * datum.simple_coroots[j][m]).sum())
                    .collect()
            })
            .collect();
        let root_index: HashMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let perm_of = |m: &LatticeMatrix| -> Result<Vec<usize>, WeylError> {
            roots
                .iter()
                .map(|v| {
                    root_index
                        .get(&mat_vec(m, v))
                        .copied()
                        .ok_or_else(|| WeylError::BadDatum("lattice map does not permute the roots".into()))
                })
                .collect()
        };

        let gens: Vec<Vec<usize>> = datum.reflections.iter().map(&perm_of).collect::<Result<_, _>>()?;
        let n_roots = roots.len();
        let identity: Vec<usize> = (0..n_roots).collect();
        let mut elements = vec![Element {
            perm: identity.clone(),
            word: vec![],
            matrix: super::datum::identity(datum.lattice_rank),
            length: 0,
        }];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (g, gp) in gens.iter().enumerate() {
                let perm: Vec<usize> = (0..n_roots).map(|i| elements[e].perm[gp[i]]).collect();
                if index.contains_key(&perm) {
                    continue;
                }
                let mut word = elements[e].word.clone();
                word.push(g);
                let matrix = mat_mul(&elements[e].matrix, &datum.reflections[g]);
                let length = (0..n_roots).filter(|&i| positive[i] && !positive[perm[i]]).count();
                if length != word.len() {
                    return Err(WeylError::BadDatum("breadth-first word is not reduced".into()));
                }
                index.insert(perm.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(Element { perm, word, matrix, length });
            }
        }

        let n = elements.len();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..n_roots).map(|i| a[b[i]]).collect() };
        let mult: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| index[&compose(&elements[a].perm, &elements[b].perm)]).collect())
            .collect();
        let inverse: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| mult[a][b] == 0).expect("group")).collect();

        let twist_perm = perm_of(&datum.twist)?;
        let twist_inv = perm_of(&finite_order_inverse(&datum.twist))?;
        let gamma: Vec<usize> = elements
            .iter()
            .map(|e| index[&compose(&compose(&twist_perm, &e.perm), &twist_inv)])
            .collect();

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for w in 0..n {
            if class_of[w] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|x| mult[mult[inverse[x]][w]][gamma[x]]).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(GammaClass { rep: w, members, label: word_label(&elements[w].word) });
        }

        Ok(WeylGroup { datum, roots, positive, elements, mult, inverse, gamma, classes, class_of })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &Element {
        &self.elements[w]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive.iter().filter(|&&p| p).count()
    }

    pub fn is_positive(&self, root: usize) -> bool {
        self.positive[root]
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn gamma(&self, w: usize) -> usize {
        self.gamma[w]
    }

    pub fn classes(&self) -> &[GammaClass] {
        &self.classes
    }

    pub fn class_of(&self, w: usize) -> usize {
        self.class_of[w]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].members.len()
    }

    /// `|C_W^γ(w)| = |W| / |class of w|`.
    pub fn gamma_centralizer_order(&self, w: usize) -> usize {
        self.order() / self.class_size(self.class_of(w))
    }

    /// The longest element.
    pub fn longest(&self) -> usize {
        (0..self.order()).max_by_key(|&w| self.length(w)).expect("nonempty")
    }

    /// Looks up an element from its lattice matrix.
    pub fn find_matrix(&self, m: &LatticeMatrix) -> Option<usize> {
        self.elements.iter().position(|e| &e.matrix == m)
    }

    /// Element given by a word in the simple reflections.
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &g| self.mul(acc, self.generator(g)))
    }

    pub fn generator(&self, g: usize) -> usize {
        1 + g
    }
}

/// Brute-force γ-classes over all pairs `(w, x)`, independent of the
/// representation cached in [`WeylGroup`].
pub fn gamma_conjugacy_classes(w: &WeylGroup) -> Vec<Vec<usize>> {
    let n = w.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut orbit = vec![a];
        seen[a] = true;
        let mut k = 0;
        while k < orbit.len() {
            let cur = orbit[k];
            for x in 0..n {
                let image = w.mul(w.mul(w.inv(x), cur), w.gamma(x));
                if !seen[image] {
                    seen[image] = true;
                    orbit.push(image);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}
