//! Super Cartan data, weights and root-lattice arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Deserialize;
use serde_json::Value;

use crate::Error;

/// Weights are identified with their tuples of pairings `<h_i, lambda>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// Coefficients in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn h(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    /// Parses `"0,-1"`. An empty string is the weight of an empty index set.
    pub fn parse(text: &str, rank: usize) -> Result<Self, Error> {
        let text = text.trim();
        let parts: Vec<i64> = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|p| p.trim().parse::<i64>().map_err(|e| Error::Parse(format!("weight {text:?}: {e}"))))
                .collect::<Result<_, _>>()?
        };
        if parts.len() != rank {
            return Err(Error::Parse(format!("weight {text:?} needs {rank} pairings")));
        }
        Ok(Self(parts))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSpec {
    pub name: String,
    pub parity: u8,
    pub d_i: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SParam {
    pub i: usize,
    pub j: usize,
    pub p: i64,
    pub q: i64,
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperCartanDatum {
    pub indices: Vec<IndexSpec>,
    /// `d[i][j]`, with the Cartan matrix being `(-d_ij)`.
    pub d: Vec<Vec<i64>>,
    /// Explicit `t_ij`; missing entries default to 1.
    pub t: BTreeMap<(usize, usize), BigRational>,
    pub s: Vec<SParam>,
    /// Base values `c_{0;i}`; missing entries default to 1.
    pub c: BTreeMap<usize, BigRational>,
    pub bar_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub constraint: &'static str,
    pub detail: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIndex {
    name: String,
    parity: u8,
    d_i: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawS {
    i: String,
    j: String,
    p: i64,
    q: i64,
    value: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDatum {
    indices: Vec<RawIndex>,
    d: Vec<Vec<i64>>,
    #[serde(default)]
    t: BTreeMap<String, Value>,
    #[serde(default)]
    s: Vec<RawS>,
    #[serde(default)]
    c: BTreeMap<String, Value>,
    #[serde(default)]
    bar_consistent: bool,
}

/// Reads a rational from a JSON integer or a string such as `"-3/2"`.
fn rational_from_json(v: &Value) -> Result<BigRational, Error> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|k| BigRational::from_integer(BigInt::from(k)))
            .ok_or_else(|| Error::Datum(format!("expected an integer or \"a/b\", got {n}"))),
        Value::String(s) => {
            let (a, b) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let num: BigInt = a.parse().map_err(|_| Error::Datum(format!("bad rational {s:?}")))?;
            let den: BigInt = b.parse().map_err(|_| Error::Datum(format!("bad rational {s:?}")))?;
            if den.is_zero() {
                return Err(Error::Datum(format!("bad rational {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(Error::Datum(format!("expected a rational, got {other}"))),
    }
}

const PRESETS: [(&str, &str); 3] = [
    ("odd-sl2", include_str!("../../../data/presets/odd-sl2.json")),
    ("odd-b2", include_str!("../../../data/presets/odd-b2.json")),
    ("sl3", include_str!("../../../data/presets/sl3.json")),
];

impl SuperCartanDatum {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let raw: RawDatum = serde_json::from_str(text).map_err(|e| Error::Datum(e.to_string()))?;
        let names: Vec<String> = raw.indices.iter().map(|x| x.name.clone()).collect();
        let lookup = |name: &str| {
            names.iter().position(|n| n == name).ok_or_else(|| Error::Datum(format!("unknown index {name:?}")))
        };
        let mut t = BTreeMap::new();
        for (key, value) in &raw.t {
            let (a, b) = key.split_once(',').ok_or_else(|| Error::Datum(format!("t key {key:?} must read \"i,j\"")))?;
            t.insert((lookup(a.trim())?, lookup(b.trim())?), rational_from_json(value)?);
        }
        let mut s = Vec::new();
        for entry in &raw.s {
            s.push(SParam {
                i: lookup(&entry.i)?,
                j: lookup(&entry.j)?,
                p: entry.p,
                q: entry.q,
                value: rational_from_json(&entry.value)?,
            });
        }
        let mut c = BTreeMap::new();
        for (key, value) in &raw.c {
            c.insert(lookup(key)?, rational_from_json(value)?);
        }
        if raw.indices.iter().any(|x| x.parity > 1) {
            return Err(Error::Datum("parity must be 0 or 1".into()));
        }
        Ok(Self {
            indices: raw
                .indices
                .into_iter()
                .map(|x| IndexSpec { name: x.name, parity: x.parity, d_i: x.d_i })
                .collect(),
            d: raw.d,
            t,
            s,
            c,
            bar_consistent: raw.bar_consistent,
        })
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Datum(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn preset_names() -> impl Iterator<Item = &'static str> {
        PRESETS.iter().map(|p| p.0)
    }

    pub fn preset(name: &str) -> Option<Self> {
        PRESETS.iter().find(|p| p.0 == name).map(|p| Self::from_json(p.1).expect("shipped preset parses"))
    }

    pub fn rank(&self) -> usize {
        self.indices.len()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.indices[i].parity
    }

    pub fn d_i(&self, i: usize) -> i64 {
        self.indices[i].d_i
    }

    pub fn dij(&self, i: usize, j: usize) -> i64 {
        self.d[i][j]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.indices.iter().position(|x| x.name == name)
    }

    pub fn t(&self, i: usize, j: usize) -> BigRational {
        self.t.get(&(i, j)).cloned().unwrap_or_else(BigRational::one)
    }

    pub fn s(&self, i: usize, j: usize, p: i64, q: i64) -> BigRational {
        self.s
            .iter()
            .find(|e| e.i == i && e.j == j && e.p == p && e.q == q)
            .map(|e| e.value.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Lists every violated constraint; empty for a valid datum.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut fail = |constraint: &'static str, detail: String| out.push(Violation { constraint, detail });
        let n = self.rank();
        if self.d.len() != n || self.d.iter().any(|row| row.len() != n) {
            fail("shape", format!("d must be a {n}x{n} matrix"));
            return out;
        }
        let name = |i: usize| self.indices[i].name.as_str();
        for i in 0..n {
            if self.indices[i].d_i <= 0 {
                fail("symmetrizer", format!("d_{} = {} is not positive", name(i), self.d_i(i)));
            }
            if self.bar_consistent && (self.d_i(i) - self.parity(i) as i64).rem_euclid(2) != 0 {
                fail(
                    "barconsistency",
                    format!("d_{} = {} but |{}| = {}", name(i), self.d_i(i), name(i), self.parity(i)),
                );
            }
            for j in 0..n {
                let dij = self.dij(i, j);
                if i == j {
                    if dij != -2 {
                        fail("cartan-diagonal", format!("d_{0}{0} = {dij}, expected -2", name(i)));
                    }
                    if !self.t(i, i).is_one() {
                        fail("a2", format!("t_{0}{0} = {1}, expected 1", name(i), self.t(i, i)));
                    }
                    continue;
                }
                if dij < 0 {
                    fail("cartan-offdiagonal", format!("d_{}{} = {dij} is negative", name(i), name(j)));
                }
                if (dij == 0) != (self.dij(j, i) == 0) {
                    fail("cartan-zero", format!("d_{0}{1} and d_{1}{0} must vanish together", name(i), name(j)));
                }
                if self.d_i(i) * dij != self.d_i(j) * self.dij(j, i) {
                    fail("symmetrizability", format!("d_{0} d_{0}{1} != d_{1} d_{1}{0}", name(i), name(j)));
                }
                if self.parity(i) == 1 && dij % 2 != 0 {
                    fail("a1", format!("|{}| odd but d_{}{} = {dij} is odd", name(i), name(i), name(j)));
                }
                if self.t(i, j).is_zero() {
                    fail("a2", format!("t_{}{} is not a unit", name(i), name(j)));
                }
                if dij == 0 && self.t(i, j) != self.t(j, i) {
                    fail("a2", format!("d_{0}{1} = 0 but t_{0}{1} != t_{1}{0}", name(i), name(j)));
                }
            }
        }
        for e in &self.s {
            let (i, j) = (e.i, e.j);
            let tag = format!("s_{}{}^{{{},{}}}", name(i), name(j), e.p, e.q);
            if i == j || !(0 < e.p && e.p < self.dij(i, j) && 0 < e.q && e.q < self.dij(j, i)) {
                fail("s-range", format!("{tag} outside 0<p<d_ij, 0<q<d_ji"));
            }
            if self.s(j, i, e.q, e.p) != e.value {
                fail("a3", format!("{tag} != s_{}{}^{{{},{}}}", name(j), name(i), e.q, e.p));
            }
            if e.p % 2 == 1 && self.parity(i) == 1 && !e.value.is_zero() {
                fail("a3", format!("{tag} must vanish since p|i| is odd"));
            }
            if !e.value.is_zero() && e.p * self.dij(j, i) + e.q * self.dij(i, j) != self.dij(i, j) * self.dij(j, i) {
                fail("hc", format!("{tag} nonzero but p d_ji + q d_ij != d_ij d_ji"));
            }
        }
        for (&i, value) in &self.c {
            if value.is_zero() {
                fail("a4", format!("c_{} is not a unit", name(i)));
            }
        }
        out
    }

    /// `<h_i, lambda + v>` for every `i`.
    pub fn pairing_shift(&self, lambda: &Weight, v: &RootVector) -> Weight {
        Weight(
            (0..self.rank())
                .map(|i| lambda.0[i] - (0..self.rank()).map(|j| v.0[j] * self.dij(i, j)).sum::<i64>())
                .collect(),
        )
    }

    /// `lambda + alpha_j` (or minus, when `sign < 0`).
    pub fn shift_simple(&self, lambda: &Weight, j: usize, sign: i64) -> Weight {
        Weight((0..self.rank()).map(|i| lambda.0[i] - sign * self.dij(i, j)).collect())
    }

    /// `|i, lambda| = |i| (<h_i, lambda> + 1) mod 2`.
    pub fn parity_i_lambda(&self, i: usize, lambda: &Weight) -> u8 {
        (self.parity(i) as i64 * (lambda.h(i) + 1)).rem_euclid(2) as u8
    }

    /// `(alpha_i, alpha_j) = -d_i d_ij`.
    pub fn simple_form(&self, i: usize, j: usize) -> i64 {
        -self.d_i(i) * self.dij(i, j)
    }

    pub fn root_form(&self, a: &RootVector, b: &RootVector) -> i64 {
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            for j in 0..n {
                total += a.0[i] * b.0[j] * self.simple_form(i, j);
            }
        }
        total
    }

    /// All weights with every pairing in `lo..=hi`.
    pub fn weights_in_box(&self, lo: i64, hi: i64) -> Vec<Weight> {
        let mut out = vec![Weight(Vec::new())];
        for _ in 0..self.rank() {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (lo..=hi).map(move |h| {
                        let mut v = w.0.clone();
                        v.push(h);
                        Weight(v)
                    })
                })
                .collect();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid() {
        for name in SuperCartanDatum::preset_names() {
            let datum = SuperCartanDatum::preset(name).unwrap();
            assert!(datum.validate().is_empty(), "{name}: {:?}", datum.validate());
        }
    }

    #[test]
    fn odd_index_needs_even_row() {
        let text = r#"{"indices":[{"name":"1","parity":1,"d_i":1},{"name":"2","parity":0,"d_i":1}],
            "d":[[-2,1],[1,-2]]}"#;
        let datum = SuperCartanDatum::from_json(text).unwrap();
        let v = datum.validate();
        assert!(v.iter().any(|x| x.constraint == "a1"), "{v:?}");
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = r#"{"indices":[],"d":[],"colour":1}"#;
        assert!(SuperCartanDatum::from_json(text).is_err());
    }

    #[test]
    fn homogeneity_condition() {
        let text = r#"{"indices":[{"name":"a","parity":0,"d_i":1},{"name":"b","parity":0,"d_i":1}],
            "d":[[-2,3],[3,-2]],
            "s":[{"i":"a","j":"b","p":1,"q":1,"value":"2/3"},{"i":"b","j":"a","p":1,"q":1,"value":"2/3"}]}"#;
        let datum = SuperCartanDatum::from_json(text).unwrap();
        let v = datum.validate();
        assert_eq!(v.iter().filter(|x| x.constraint == "hc").count(), 2, "{v:?}");
    }

    #[test]
    fn pairings_and_forms() {
        let b2 = SuperCartanDatum::preset("odd-b2").unwrap();
        assert_eq!(b2.pairing_shift(&Weight(vec![0, 0]), &RootVector(vec![0, 1])), Weight(vec![-2, 2]));
        assert_eq!(b2.root_form(&RootVector::simple(2, 0), &RootVector::simple(2, 1)), -2);
        assert_eq!(b2.root_form(&RootVector::simple(2, 1), &RootVector::simple(2, 0)), -2);
        let sl2 = SuperCartanDatum::preset("odd-sl2").unwrap();
        assert_eq!(sl2.parity_i_lambda(0, &Weight(vec![2])), 1);
        assert_eq!(sl2.parity_i_lambda(0, &Weight(vec![-1])), 0);
        assert_eq!(sl2.root_form(&RootVector::simple(1, 0), &RootVector::simple(1, 0)), 2);
    }
}
