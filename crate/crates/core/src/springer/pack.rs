use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{ComponentGroup, PackError};
use crate::algebra::{IntPoly, RatMatrix, RatPoly};
use crate::arith::{is_prime, prime_powers, PrimePower};
use crate::weyl::{character_table, expected_labels, CartanDatum, SigmaRows, TypeLabel, WeylGroup};

/// Odd primes used to check the sign-stability law `δ(q^r) = δ(q)^r`.
pub const STABILITY_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

/// A sign that may depend on the residue of `q` modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueSign {
    modulus: u64,
    signs: BTreeMap<u64, i8>,
}

impl ResidueSign {
    pub fn constant(sign: i8) -> Self {
        ResidueSign { modulus: 1, signs: BTreeMap::from([(0, sign)]) }
    }

    pub fn new(modulus: u64, signs: BTreeMap<u64, i8>) -> Result<Self, PackError> {
        if modulus == 0 {
            return Err(PackError::Schema("sign modulus must be positive".into()));
        }
        if signs.is_empty() {
            return Err(PackError::Schema("sign table is empty".into()));
        }
        for (&res, &s) in &signs {
            if res >= modulus || (s != 1 && s != -1) {
                return Err(PackError::Schema(format!("bad sign entry {res} -> {s} mod {modulus}")));
            }
        }
        Ok(ResidueSign { modulus, signs })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn signs(&self) -> &BTreeMap<u64, i8> {
        &self.signs
    }

    pub fn is_constant(&self) -> bool {
        let mut values = self.signs.values();
        let first = values.next();
        values.all(|v| Some(v) == first)
    }

    pub fn at_residue(&self, residue: u64) -> Option<i8> {
        self.signs.get(&(residue % self.modulus)).copied()
    }

    pub fn at(&self, q: &PrimePower) -> Option<i8> {
        self.at_residue(q.residue(self.modulus))
    }

    /// First `(residue, r)` that breaks `sign(q^r) = sign(q)^r` for the
    /// stability primes `r ≡ 1 mod d` coprime to the modulus.
    pub fn stability_violation(&self, twist_order: u32) -> Option<(u64, u64)> {
        for &r in &STABILITY_PRIMES {
            if self.modulus.is_multiple_of(r) || (r - 1) % u64::from(twist_order) != 0 {
                continue;
            }
            for (&res, &s) in &self.signs {
                let image = mod_pow(res, r, self.modulus);
                let expect = if r % 2 == 0 { 1 } else { s };
                if self.at_residue(image) != Some(expect) {
                    return Some((res, r));
                }
            }
        }
        None
    }
}

fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

/// A `G^F`-class inside `C^F`, indexed by a class of the component group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfClass {
    pub a_label: String,
    pub size: RatPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentClass {
    pub label: String,
    pub dim: usize,
    pub component_group: ComponentGroup,
    pub gf_classes: Vec<GfClass>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerEntry {
    pub char_label: String,
    pub class_label: String,
    pub a_character: Vec<i64>,
    pub d: usize,
    pub delta: ResidueSign,
}

/// One column of a Green table: a unipotent `G^F`-class `u_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub class: usize,
    pub a: usize,
    pub label: String,
}

/// Unipotent-class and Springer data for one type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataPack {
    pub label: TypeLabel,
    pub provenance: String,
    /// Characteristics in which the data does not apply.
    pub bad_characteristics: Vec<u64>,
    pub classes: Vec<UnipotentClass>,
    pub springer: Vec<SpringerEntry>,
    pub sigma: Option<SigmaRows>,
}

impl DataPack {
    pub fn is_admissible(&self, q: &PrimePower) -> bool {
        !self.bad_characteristics.contains(&q.characteristic())
    }

    pub fn check_admissible(&self, q: &PrimePower) -> Result<(), PackError> {
        if self.is_admissible(q) {
            Ok(())
        } else {
            Err(PackError::Inadmissible { label: self.label.to_string(), q: q.to_string() })
        }
    }

    /// Admissible prime powers in increasing order.
    pub fn admissible_prime_powers(&self) -> impl Iterator<Item = PrimePower> + '_ {
        prime_powers().filter(|q| self.is_admissible(q))
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn entry(&self, char_label: &str) -> Option<&SpringerEntry> {
        self.springer.iter().find(|e| e.char_label == char_label)
    }

    /// Columns ordered by increasing class dimension, then class label, then
    /// component-group class in pack order.
    pub fn columns(&self) -> Vec<Column> {
        let mut order: Vec<usize> = (0..self.classes.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&self.classes[a], &self.classes[b]);
            ca.dim.cmp(&cb.dim).then_with(|| ca.label.cmp(&cb.label))
        });
        let mut out = Vec::new();
        for c in order {
            let class = &self.classes[c];
            for (a, g) in class.gf_classes.iter().enumerate() {
                let label = if class.gf_classes.len() == 1 {
                    class.label.clone()
                } else {
                    format!("{}:{}", class.label, g.a_label)
                };
                out.push(Column { class: c, a, label });
            }
        }
        out
    }

    pub fn class_size(&self, col: &Column, q: &PrimePower) -> Result<BigInt, PackError> {
        let v = self.classes[col.class].gf_classes[col.a].size.eval_int(q.value());
        if !v.is_integer() || !v.is_positive() {
            return Err(PackError::ClassData(format!(
                "class size of {} at q = {q} is {v}, not a positive integer",
                col.label
            )));
        }
        Ok(v.to_integer())
    }

    /// `Y_E(u_a) = δ_E(q) ε_E(a)` on `C(E)` and zero elsewhere.
    pub fn y_value(&self, char_label: &str, class_label: &str, a_label: &str, q: &PrimePower) -> Result<i64, PackError> {
        let entry = self.entry(char_label).ok_or_else(|| PackError::Label(format!("unknown character {char_label}")))?;
        let class = self
            .classes
            .iter()
            .find(|c| c.label == class_label)
            .ok_or_else(|| PackError::Label(format!("unknown class {class_label}")))?;
        let a = class
            .gf_classes
            .iter()
            .position(|g| g.a_label == a_label)
            .ok_or_else(|| PackError::Label(format!("unknown component class {a_label} in {class_label}")))?;
        if entry.class_label != class_label {
            return Ok(0);
        }
        let delta = entry.delta.at(q).ok_or_else(|| PackError::ResidueNotCovered {
            char_label: char_label.to_string(),
            residue: q.residue(entry.delta.modulus()),
        })?;
        Ok(i64::from(delta) * entry.a_character[a])
    }

    /// The Y-function matrix with rows in `chars` order and columns as in
    /// [`DataPack::columns`].
    pub fn y_matrix(&self, chars: &[String], q: &PrimePower) -> Result<Vec<Vec<i64>>, PackError> {
        let cols = self.columns();
        chars
            .iter()
            .map(|e| {
                cols.iter()
                    .map(|c| {
                        let class = &self.classes[c.class];
                        self.y_value(e, &class.label, &class.gf_classes[c.a].a_label, q)
                    })
                    .collect()
            })
            .collect()
    }

    /// Full validation against the Weyl group of the pack's type.
    /// Residues mod `m` of admissible prime powers: every unit (Dirichlet),
    /// and the powers of admissible primes dividing `m`.
    pub fn reachable_residues(&self, m: u64) -> impl Iterator<Item = u64> + '_ {
        let mut out = BTreeSet::new();
        for x in 0..m {
            if num_integer::gcd(x, m) == 1 {
                out.insert(x % m);
            }
        }
        for p in (2..=m).filter(|&p| m.is_multiple_of(p) && is_prime(p) && !self.bad_characteristics.contains(&p)) {
            let mut x = p % m;
            while out.insert(x) {
                x = x * p % m;
            }
        }
        out.into_iter()
    }

    pub fn validate(&self) -> Result<(), PackError> {
        let datum = CartanDatum::new(self.label).map_err(|e| PackError::Type(e.to_string()))?;
        let w = WeylGroup::new(datum).map_err(|e| PackError::Type(e.to_string()))?;
        self.validate_with(&w)
    }

    pub fn validate_with(&self, w: &WeylGroup) -> Result<(), PackError> {
        if self.provenance.trim().is_empty() {
            return Err(PackError::Schema("provenance is mandatory".into()));
        }
        if let Some(p) = self.bad_characteristics.iter().find(|&&p| !is_prime(p)) {
            return Err(PackError::Schema(format!("bad characteristic {p} is not prime")));
        }
        let n_pos = w.positive_root_count();
        let datum = w.datum();

        let mut labels = BTreeSet::new();
        for class in &self.classes {
            if !labels.insert(class.label.as_str()) {
                return Err(PackError::Label(format!("duplicate class {}", class.label)));
            }
            if class.dim % 2 != 0 || class.dim > 2 * n_pos {
                return Err(PackError::ClassData(format!("class {} has dimension {}", class.label, class.dim)));
            }
            let a_labels: Vec<&str> = class.gf_classes.iter().map(|g| g.a_label.as_str()).collect();
            if a_labels != class.component_group.class_labels().iter().map(String::as_str).collect::<Vec<_>>() {
                return Err(PackError::ClassData(format!(
                    "class {} lists component classes {:?}, expected those of {}",
                    class.label, a_labels, class.component_group
                )));
            }
        }

        let expected: BTreeSet<String> = expected_labels(self.label).into_iter().collect();
        let given: BTreeSet<String> = self.springer.iter().map(|e| e.char_label.clone()).collect();
        if given.len() != self.springer.len() || given != expected {
            return Err(PackError::Label(format!("character labels {given:?} do not match {expected:?}")));
        }

        let mut images = BTreeSet::new();
        for e in &self.springer {
            let class = self
                .classes
                .iter()
                .find(|c| c.label == e.class_label)
                .ok_or_else(|| PackError::Label(format!("{} maps to unknown class {}", e.char_label, e.class_label)))?;
            if !class.component_group.rational_characters().contains(&e.a_character) {
                return Err(PackError::Character(format!(
                    "{} carries {:?}, not an integer-valued irreducible character of {}",
                    e.char_label, e.a_character, class.component_group
                )));
            }
            if !images.insert((e.class_label.clone(), e.a_character.clone())) {
                return Err(PackError::NotInjective(e.char_label.clone()));
            }
            let expect = n_pos - class.dim / 2;
            if e.d != expect {
                return Err(PackError::DMismatch { char_label: e.char_label.clone(), expected: expect, found: e.d });
            }
            if let Some((residue, r)) = e.delta.stability_violation(datum.twist_order) {
                return Err(PackError::SignStability { char_label: e.char_label.clone(), residue, r });
            }
            if let Some(residue) = self.reachable_residues(e.delta.modulus()).find(|&x| e.delta.at_residue(x).is_none()) {
                return Err(PackError::ResidueNotCovered { char_label: e.char_label.clone(), residue });
            }
        }

        // Y-functions must be linearly independent; signs do not affect the rank
        let cols = self.columns();
        let rows: Vec<Vec<BigRational>> = self
            .springer
            .iter()
            .map(|e| {
                cols.iter()
                    .map(|c| {
                        let v = if self.classes[c.class].label == e.class_label { e.a_character[c.a] } else { 0 };
                        BigRational::from_integer(v.into())
                    })
                    .collect()
            })
            .collect();
        let y = RatMatrix::from_rows(rows).map_err(|e| PackError::Schema(e.to_string()))?;
        if y.rank() != self.springer.len() {
            return Err(PackError::YDependent);
        }

        // the unipotent variety has q^{2N} points
        let total = self
            .classes
            .iter()
            .flat_map(|c| c.gf_classes.iter())
            .fold(RatPoly::zero(), |acc, g| &acc + &g.size);
        if total != IntPoly::monomial(1, 2 * n_pos).to_rat() {
            return Err(PackError::UnipotentCount(total.to_string()));
        }
        for q in self.admissible_prime_powers().take(6) {
            for c in &cols {
                self.class_size(c, &q)?;
            }
        }

        match (self.label.is_twisted(), &self.sigma) {
            (true, None) => return Err(PackError::Sigma("twisted character data absent".into())),
            (false, Some(_)) => return Err(PackError::Sigma("untwisted type carries a sigma table".into())),
            (true, Some(rows)) => {
                character_table(w, Some(rows)).map_err(|e| PackError::Sigma(e.to_string()))?;
            }
            (false, None) => {}
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPack {
    #[serde(rename = "type")]
    type_label: String,
    provenance: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    bad_characteristics: Vec<u64>,
    classes: Vec<RawClass>,
    springer: Vec<RawSpringer>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma_table: Option<Vec<RawSigmaRow>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    label: String,
    dim: usize,
    component_group: String,
    gf_classes: Vec<RawGfClass>,
}

fn one() -> u64 {
    1
}

fn is_one(v: &u64) -> bool {
    *v == 1
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGfClass {
    a_label: String,
    size_poly: Vec<i64>,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    size_denominator: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpringer {
    char_label: String,
    class_label: String,
    a_character: Vec<i64>,
    d: usize,
    delta: RawDelta,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDelta {
    modulus: u64,
    /// `[residue, sign]` pairs.
    signs: Vec<(u64, i8)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSigmaRow {
    char_label: String,
    values: Vec<i64>,
}

/// Parses and fully validates a pack. Any failure rejects the whole pack.
pub fn load_pack(text: &str) -> Result<DataPack, PackError> {
    let pack = parse_pack(text)?;
    pack.validate()?;
    Ok(pack)
}

/// Parses without the semantic validation of [`DataPack::validate`].
pub fn parse_pack(text: &str) -> Result<DataPack, PackError> {
    let raw: RawPack = serde_json::from_str(text).map_err(|e| PackError::Schema(e.to_string()))?;
    let label: TypeLabel = raw.type_label.parse().map_err(|e: crate::weyl::WeylError| PackError::Type(e.to_string()))?;
    let classes = raw
        .classes
        .into_iter()
        .map(|c| {
            let component_group: ComponentGroup = c.component_group.parse().map_err(PackError::ClassData)?;
            let gf_classes = c
                .gf_classes
                .into_iter()
                .map(|g| {
                    if g.size_denominator == 0 {
                        return Err(PackError::Schema("zero size denominator".into()));
                    }
                    let denom = BigRational::from_integer(g.size_denominator.into()).recip();
                    let size = IntPoly::from_i64s(&g.size_poly).to_rat().scale(&denom);
                    Ok(GfClass { a_label: g.a_label, size })
                })
                .collect::<Result<_, _>>()?;
            Ok(UnipotentClass { label: c.label, dim: c.dim, component_group, gf_classes })
        })
        .collect::<Result<_, PackError>>()?;
    let springer = raw
        .springer
        .into_iter()
        .map(|s| {
            let mut signs = BTreeMap::new();
            for (res, sign) in s.delta.signs {
                if signs.insert(res, sign).is_some() {
                    return Err(PackError::Schema(format!("duplicate residue {res}")));
                }
            }
            Ok(SpringerEntry {
                char_label: s.char_label,
                class_label: s.class_label,
                a_character: s.a_character,
                d: s.d,
                delta: ResidueSign::new(s.delta.modulus, signs)?,
            })
        })
        .collect::<Result<_, PackError>>()?;
    let sigma = raw
        .sigma_table
        .map(|rows| SigmaRows { rows: rows.into_iter().map(|r| (r.char_label, r.values)).collect() });
    Ok(DataPack {
        label,
        provenance: raw.provenance,
        bad_characteristics: raw.bad_characteristics,
        classes,
        springer,
        sigma,
    })
}

/// Canonical text form; `dump_pack(&load_pack(t)?) == t` for canonical `t`.
pub fn dump_pack(pack: &DataPack) -> String {
    let raw = RawPack {
        type_label: pack.label.to_string(),
        provenance: pack.provenance.clone(),
        bad_characteristics: pack.bad_characteristics.clone(),
        classes: pack
            .classes
            .iter()
            .map(|c| RawClass {
                label: c.label.clone(),
                dim: c.dim,
                component_group: c.component_group.to_string(),
                gf_classes: c
                    .gf_classes
                    .iter()
                    .map(|g| {
                        let (numer, denom) = g.size.to_scaled_int();
                        RawGfClass {
                            a_label: g.a_label.clone(),
                            size_poly: numer.coeffs().iter().map(|v| i64::try_from(v).expect("small coefficient")).collect(),
                            size_denominator: u64::try_from(&denom).expect("small denominator"),
                        }
                    })
                    .collect(),
            })
            .collect(),
        springer: pack
            .springer
            .iter()
            .map(|s| RawSpringer {
                char_label: s.char_label.clone(),
                class_label: s.class_label.clone(),
                a_character: s.a_character.clone(),
                d: s.d,
                delta: RawDelta {
                    modulus: s.delta.modulus(),
                    signs: s.delta.signs().iter().map(|(&r, &v)| (r, v)).collect(),
                },
            })
            .collect(),
        sigma_table: pack.sigma.as_ref().map(|rows| {
            rows.rows
                .iter()
                .map(|(l, v)| RawSigmaRow { char_label: l.clone(), values: v.clone() })
                .collect()
        }),
    };
    let pretty = serde_json::to_string_pretty(&raw).expect("serializable");
    inline_scalar_arrays(&pretty)
}

/// Puts arrays that hold only scalars on one line.
fn inline_scalar_arrays(pretty: &str) -> String {
    let lines: Vec<&str> = pretty.lines().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i];
        if line.ends_with('[') {
            let end = (i + 1..lines.len()).find(|&j| {
                let t = lines[j].trim_start();
                t.starts_with(']') || t.ends_with('[') || t.ends_with('{') || t.starts_with('}')
            });
            if let Some(j) = end.filter(|&j| lines[j].trim_start().starts_with(']')) {
                let items: Vec<&str> = lines[i + 1..j].iter().map(|l| l.trim().trim_end_matches(',')).collect();
                out.push_str(line);
                out.push_str(&items.join(", "));
                out.push_str(lines[j].trim_start());
                out.push('\n');
                i = j + 1;
                continue;
            }
        }
        out.push_str(line);
        out.push('\n');
        i += 1;
    }
    out
}

impl SpringerEntry {
    /// `δ_E ε_E(1)`, the value of `Y_E` at `u_1`.
    pub fn y_at_identity(&self, q: &PrimePower) -> Option<i64> {
        self.delta.at(q).map(|s| i64::from(s) * self.a_character[0])
    }
}

impl UnipotentClass {
    pub fn total_size(&self) -> RatPoly {
        self.gf_classes.iter().fold(RatPoly::zero(), |acc, g| &acc + &g.size)
    }
}
