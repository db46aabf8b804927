//! Homogeneity lint for relations given as slice-diagram templates.
//!
//! A template names colors by variables (`i`, `j`, ...) and may use integer
//! parameters and the pairings `h_i = <h_i, lambda>` of the ambient weight in
//! dot counts, e.g. `dot 0 n+h_i-1`. `a_ij` stands for `<h_i, alpha_j>`.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::{apply_slice, Chirality, End, Slice, SliceDiagram};
use crate::cartan::{SuperCartanDatum, Weight};
use crate::covering::Letter;
use crate::Error;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationEntry {
    pub name: String,
    pub paper_ref: String,
    pub colors: Vec<String>,
    /// Color variables that must be assigned odd indices.
    #[serde(default)]
    pub odd: Vec<String>,
    /// Color variables that must be assigned even indices.
    #[serde(default)]
    pub even: Vec<String>,
    /// Grade negative dot counts formally (`2 d_i` and `|i|` per dot)
    /// instead of skipping the instance.
    #[serde(default)]
    pub formal: bool,
    /// Whether distinct variables must take distinct indices.
    #[serde(default = "yes")]
    pub distinct: bool,
    #[serde(default)]
    pub params: BTreeMap<String, [i64; 2]>,
    pub terms: Vec<TermTemplate>,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermTemplate {
    #[serde(default)]
    pub label: String,
    /// Space-separated `+i` / `-i` tokens over color variables.
    pub bottom: String,
    pub slices: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LintReport {
    pub name: String,
    pub paper_ref: String,
    pub instances: usize,
    pub skipped: Vec<String>,
    pub mismatches: Vec<String>,
}

impl LintReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn load_catalog(text: &str) -> Result<Vec<RelationEntry>, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("relation catalog: {e}")))
}

/// The catalog shipped with the crate.
pub fn shipped_catalog() -> Vec<RelationEntry> {
    load_catalog(include_str!("../../../../data/relations/catalog.json")).expect("shipped catalog parses")
}

struct Env<'a> {
    datum: &'a SuperCartanDatum,
    colors: &'a BTreeMap<String, usize>,
    params: &'a BTreeMap<String, i64>,
    lambda: &'a Weight,
}

impl Env<'_> {
    fn color(&self, var: &str) -> Result<usize, Error> {
        self.colors.get(var).copied().ok_or_else(|| Error::Parse(format!("unknown color variable {var:?}")))
    }

    fn var(&self, name: &str) -> Result<i64, Error> {
        if let Some(c) = name.strip_prefix("h_") {
            return Ok(self.lambda.h(self.color(c)?));
        }
        if let Some(pair) = name.strip_prefix("a_") {
            let mut vars = pair.chars().map(|v| self.color(&v.to_string()));
            if let (Some(i), Some(j), None) = (vars.next(), vars.next(), vars.next()) {
                return Ok(-self.datum.dij(i?, j?));
            }
        }
        self.params.get(name).copied().ok_or_else(|| Error::Parse(format!("unknown parameter {name:?}")))
    }

    /// Evaluates a sum like `2n-h_i+1`.
    fn eval(&self, expr: &str) -> Result<i64, Error> {
        let mut total = 0;
        let mut rest = expr.trim();
        if rest.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let coeff: i64 = if digits == 0 { 1 } else { term[..digits].parse().unwrap() };
            let var = &term[digits..];
            let value = if var.is_empty() {
                if digits == 0 {
                    return Err(Error::Parse(format!("bad expression {expr:?}")));
                }
                1
            } else {
                self.var(var)?
            };
            total += sign * coeff * value;
        }
        Ok(total)
    }
}

enum Instantiated {
    /// A diagram and the formal grade of its negative dot counts.
    Diagram(SliceDiagram, (i64, i64)),
    NegativeDots(String),
}

fn chirality(text: &str) -> Result<Chirality, Error> {
    match text {
        "cw" => Ok(Chirality::Cw),
        "ccw" => Ok(Chirality::Ccw),
        other => Err(Error::Parse(format!("bad chirality {other:?}"))),
    }
}

fn instantiate(term: &TermTemplate, env: &Env, formal: bool) -> Result<Instantiated, Error> {
    let bottom: Vec<End> = term
        .bottom
        .split_whitespace()
        .map(|tok| {
            let (up, var) = tok.split_at(1);
            Ok(Letter { up: up == "+", i: env.color(var)? })
        })
        .collect::<Result<_, Error>>()?;
    let mut slices = Vec::new();
    let mut frontier = bottom.clone();
    let mut offset = (0, 0);
    for text in &term.slices {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let pos = |k: usize| -> Result<usize, Error> {
            parts.get(k).and_then(|p| p.parse().ok()).ok_or_else(|| Error::Parse(format!("bad slice {text:?}")))
        };
        let slice = match parts.first().copied() {
            Some("dot") if parts.len() == 3 => {
                let count = env.eval(parts[2])?;
                let position = pos(1)?;
                if count < 0 {
                    if !formal {
                        return Ok(Instantiated::NegativeDots(format!("{text:?} gives {count} dots")));
                    }
                    let Some(e) = frontier.get(position) else {
                        return Err(Error::Parse(format!("dot outside frontier in {text:?}")));
                    };
                    offset.0 += 2 * env.datum.d_i(e.i) * count;
                    offset.1 += env.datum.parity(e.i) as i64 * count;
                    continue;
                }
                Slice::Dot { position, count: count as u32 }
            }
            Some("cross") if parts.len() == 2 => Slice::Cross { position: pos(1)? },
            Some("cup") if parts.len() == 4 => {
                Slice::Cup { position: pos(1)?, color: env.color(parts[2])?, chirality: chirality(parts[3])? }
            }
            Some("cap") if parts.len() == 4 => {
                Slice::Cap { position: pos(1)?, color: env.color(parts[2])?, chirality: chirality(parts[3])? }
            }
            _ => return Err(Error::Parse(format!("bad slice {text:?}"))),
        };
        if let Slice::Cap { position, .. } | Slice::Cross { position } = slice {
            if position + 1 >= frontier.len() {
                return Err(Error::Parse(format!("{text:?} outside frontier")));
            }
        }
        apply_slice(&mut frontier, &slice);
        slices.push(slice);
    }
    Ok(Instantiated::Diagram(SliceDiagram { bottom, slices, lambda: env.lambda.clone() }, offset))
}

fn color_assignments(datum: &SuperCartanDatum, entry: &RelationEntry) -> Vec<BTreeMap<String, usize>> {
    let mut out = vec![BTreeMap::new()];
    for var in &entry.colors {
        let mut next = Vec::new();
        for partial in &out {
            for i in 0..datum.rank() {
                if entry.odd.contains(var) && datum.parity(i) == 0 || entry.even.contains(var) && datum.parity(i) == 1 {
                    continue;
                }
                if entry.distinct && partial.values().any(|&x| x == i) {
                    continue;
                }
                let mut m: BTreeMap<String, usize> = partial.clone();
                m.insert(var.clone(), i);
                next.push(m);
            }
        }
        out = next;
    }
    out
}

fn param_assignments(entry: &RelationEntry) -> Vec<BTreeMap<String, i64>> {
    let mut out = vec![BTreeMap::new()];
    for (name, [lo, hi]) in &entry.params {
        out = out
            .into_iter()
            .flat_map(|m| {
                (*lo..=*hi).map(move |v| {
                    let mut m2 = m.clone();
                    m2.insert(name.clone(), v);
                    m2
                })
            })
            .collect();
    }
    out
}

/// Checks that all terms of `entry` share degree and parity at `lambda`, for
/// every admissible color assignment and parameter value.
pub fn lint_relation(datum: &SuperCartanDatum, entry: &RelationEntry, lambda: &Weight) -> Result<LintReport, Error> {
    let mut report = LintReport { name: entry.name.clone(), paper_ref: entry.paper_ref.clone(), ..Default::default() };
    for colors in color_assignments(datum, entry) {
        for params in param_assignments(entry) {
            let env = Env { datum, colors: &colors, params: &params, lambda };
            let context = format!("colors {colors:?} params {params:?} lambda ({lambda})");
            let mut grades: Vec<(String, (i64, u8))> = Vec::new();
            let mut top: Option<Vec<End>> = None;
            for (k, term) in entry.terms.iter().enumerate() {
                let label = if term.label.is_empty() { format!("term {k}") } else { term.label.clone() };
                match instantiate(term, &env, entry.formal)? {
                    Instantiated::NegativeDots(why) => report.skipped.push(format!("{label} at {context}: {why}")),
                    Instantiated::Diagram(d, (deg, par)) => {
                        if d.bottom.len() != entry.terms[0].bottom.split_whitespace().count() {
                            return Err(Error::Parse(format!("{}: {label} has a different bottom", entry.name)));
                        }
                        let t = d.top();
                        if top.get_or_insert_with(|| t.clone()) != &t {
                            return Err(Error::Parse(format!("{}: {label} has a different top", entry.name)));
                        }
                        let (d0, p0) = d.grade(datum)?;
                        grades.push((label, (d0 + deg, (p0 as i64 + par).rem_euclid(2) as u8)));
                    }
                }
            }
            report.instances += 1;
            if let Some((first_label, first)) = grades.first() {
                for (label, g) in &grades[1..] {
                    if g != first {
                        report
                            .mismatches
                            .push(format!("{label} has (deg, par) {g:?} but {first_label} has {first:?} at {context}"));
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let colors: BTreeMap<String, usize> = [("i".to_string(), 0)].into();
        let params: BTreeMap<String, i64> = [("n".to_string(), 3)].into();
        let lambda = Weight(vec![-2]);
        let datum = &SuperCartanDatum::preset("odd-sl2").unwrap();
        let env = Env { datum, colors: &colors, params: &params, lambda: &lambda };
        assert_eq!(env.eval("n+h_i-1").unwrap(), 0);
        assert_eq!(env.eval("2n-h_i").unwrap(), 8);
        assert_eq!(env.eval("-h_i-1").unwrap(), 1);
        assert_eq!(env.eval("h_i+a_ii").unwrap(), 0);
        assert!(env.eval("h_k").is_err());
    }
}
