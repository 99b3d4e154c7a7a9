//! Surgery presentations as framed braid closures, and the invariant
//! τ(M) = Δ^{-N-1} Σ_λ Π_q dim(λ_q) F(L, λ) for anomaly-free data.
//!
//! Document format:
//!
//! ```text
//! tvk-surgery 1
//! name lens(3,1)
//! strands 1
//! word
//! framing 3
//! ```
//!
//! `word` lists signed generators (may be empty); `framing` gives one
//! integer per closure component, in order of their smallest strand.

use rayon::prelude::*;
use tvk_fusion_data::Label;
use tvk_scalars::Cyclotomic;

use crate::braid::{eval_with, Braid, BraidRep};
use crate::{ModularData, ModularError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surgery {
    pub name: String,
    pub braid: Braid,
    pub framings: Vec<i64>,
}

impl Surgery {
    pub fn new(name: impl Into<String>, braid: Braid, framings: Vec<i64>) -> Result<Self, ModularError> {
        let nc = braid.component_count();
        if framings.len() != nc {
            return Err(ModularError::Presentation(format!(
                "{nc} components need {nc} framings, got {}",
                framings.len()
            )));
        }
        Ok(Surgery { name: name.into(), braid, framings })
    }

    /// The empty link: S³.
    pub fn empty() -> Self {
        Surgery { name: "s3".into(), braid: Braid { strands: 0, word: vec![] }, framings: vec![] }
    }

    /// The p-framed unknot: L(p, 1), with p = 0 giving S¹ × S².
    pub fn unknot(p: i64) -> Self {
        let name = if p == 0 { "s1xs2".to_string() } else { format!("lens({},1)", p.abs()) };
        Surgery { name, braid: Braid { strands: 1, word: vec![] }, framings: vec![p] }
    }

    pub fn components(&self) -> usize {
        self.framings.len()
    }

    pub fn to_document(&self) -> String {
        let word: Vec<String> = self.braid.word.iter().map(|g| g.to_string()).collect();
        let framing: Vec<String> = self.framings.iter().map(|g| g.to_string()).collect();
        format!(
            "tvk-surgery 1\nname {}\nstrands {}\nword {}\nframing {}\n",
            self.name,
            self.braid.strands,
            word.join(" "),
            framing.join(" ")
        )
        .replace(" \n", "\n")
    }

    pub fn from_document(text: &str) -> Result<Self, ModularError> {
        let err = |line: usize, m: &str| ModularError::Presentation(format!("line {line}: {m}"));
        let mut header = false;
        let mut name = String::from("unnamed");
        let mut strands = None;
        let mut word = Vec::new();
        let mut framings = None;
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut parts = t.split_whitespace();
            let key = parts.next().expect("nonempty");
            let rest: Vec<&str> = parts.collect();
            let ints = |v: &[&str]| -> Result<Vec<i64>, ModularError> {
                v.iter().map(|s| s.parse::<i64>().map_err(|_| err(line, &format!("bad integer '{s}'")))).collect()
            };
            match key {
                "tvk-surgery" => {
                    if rest != ["1"] {
                        return Err(err(line, "unsupported version"));
                    }
                    header = true;
                }
                "name" => name = rest.join(" "),
                "strands" => {
                    let v = ints(&rest)?;
                    if v.len() != 1 || v[0] < 0 {
                        return Err(err(line, "strands takes one nonnegative integer"));
                    }
                    strands = Some(v[0] as usize);
                }
                "word" => word = ints(&rest)?.into_iter().map(|g| g as i32).collect(),
                "framing" => framings = Some(ints(&rest)?),
                k => return Err(err(line, &format!("unknown keyword '{k}'"))),
            }
        }
        if !header {
            return Err(ModularError::Presentation("missing 'tvk-surgery 1' header".into()));
        }
        let strands = strands.ok_or_else(|| ModularError::Presentation("missing strands".into()))?;
        let braid = Braid::new(strands, word)?;
        Surgery::new(name, braid, framings.unwrap_or_default())
    }
}

pub fn rt_invariant(m: &ModularData, surgery: &Surgery) -> Result<Cyclotomic, ModularError> {
    if !m.is_anomaly_free() {
        let (p, q) = m.gauss_sums();
        return Err(ModularError::Anomaly { plus: p.to_string(), minus: q.to_string() });
    }
    let f = m.base();
    let delta = m.gauss_sums().0;
    let n = surgery.components();
    let rep = BraidRep::new(m);
    let colorings: Vec<Vec<Label>> = (0..f.rank().pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let c = code % f.rank();
                    code /= f.rank();
                    c
                })
                .collect()
        })
        .collect();
    let sum = colorings
        .par_iter()
        .map(|lambda| -> Result<Cyclotomic, ModularError> {
            let w: Cyclotomic = lambda.iter().map(|&c| f.dim(c).clone()).product();
            Ok(w * eval_with(&rep, m, &surgery.braid, &surgery.framings, lambda)?)
        })
        .try_reduce(Cyclotomic::zero, |a, b| Ok(a + b))?;
    Ok(sum * delta.pow(-(n as i64) - 1))
}
