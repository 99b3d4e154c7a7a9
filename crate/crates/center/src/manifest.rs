//! Pairing manifests: a category, the modular data of its center, and
//! (triangulation, surgery presentation) pairs naming the same manifolds.
//!
//! ```text
//! tvk-manifest 1
//! pair builtin:vecZ2 double:2
//! case builtin:lens(3,1) unknot:3
//! pair fibonacci.cat fibonacci-square.mod
//! case builtin:s3_1tet empty
//! case lens31.tri lens31.srg
//! ```
//!
//! A category is a file or `builtin:<name>`. A center is a file,
//! `builtin:<name>` or `double:n_1,n_2,...`. A triangulation is a file or
//! `builtin:<name>`; a surgery is a file, `empty` or `unknot:<framing>`.
//! Paths are relative to the manifest's directory.

use std::path::{Path, PathBuf};

use tvk_fusion_data::FusionData;
use tvk_manifold::Triangulation;
use tvk_modular_rt::{ModularData, Surgery};

use crate::{drinfeld_double_abelian, verify_main_theorem, AbelianGroup, CenterError, MainTheoremReport};

#[derive(Debug, thiserror::Error)]
pub enum ManifestError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{path}: {msg}")]
    Input { path: String, msg: String },
}

#[derive(Clone, Debug)]
pub struct Case {
    pub triangulation: Triangulation,
    pub surgery: Surgery,
}

#[derive(Clone, Debug)]
pub struct Pairing {
    pub category: FusionData,
    pub center: ModularData,
    pub cases: Vec<Case>,
}

#[derive(Clone, Debug)]
pub struct Manifest {
    pub pairings: Vec<Pairing>,
}

fn read(base: &Path, r: &str) -> Result<String, ManifestError> {
    let p: PathBuf = base.join(r);
    std::fs::read_to_string(&p).map_err(|e| ManifestError::Input { path: p.display().to_string(), msg: e.to_string() })
}

fn input(r: &str, e: impl std::fmt::Display) -> ManifestError {
    ManifestError::Input { path: r.to_string(), msg: e.to_string() }
}

pub fn load_category(base: &Path, r: &str) -> Result<FusionData, ManifestError> {
    match r.strip_prefix("builtin:") {
        Some(name) => tvk_fusion_data::builtin::by_name(name).ok_or_else(|| input(r, "unknown builtin category")),
        None => FusionData::from_document(&read(base, r)?).map_err(|e| input(r, e)),
    }
}

pub fn load_modular(base: &Path, r: &str) -> Result<ModularData, ManifestError> {
    if let Some(name) = r.strip_prefix("builtin:") {
        return tvk_modular_rt::builtin::by_name(name).ok_or_else(|| input(r, "unknown builtin modular data"));
    }
    if let Some(list) = r.strip_prefix("double:") {
        let factors = list
            .split(',')
            .map(|s| s.trim().parse::<u64>().map_err(|_| input(r, "bad invariant factor")))
            .collect::<Result<Vec<_>, _>>()?;
        let factors: Vec<u64> = factors.into_iter().filter(|&n| n != 1).collect();
        let g = AbelianGroup::new(factors).map_err(|e| input(r, e))?;
        return Ok(drinfeld_double_abelian(&g));
    }
    ModularData::from_document(&read(base, r)?).map_err(|e| input(r, e))
}

pub fn load_triangulation(base: &Path, r: &str) -> Result<Triangulation, ManifestError> {
    match r.strip_prefix("builtin:") {
        Some(name) => tvk_manifold::builtin(name).map_err(|e| input(r, e)),
        None => Triangulation::from_document(&read(base, r)?).map_err(|e| input(r, e)),
    }
}

pub fn load_surgery(base: &Path, r: &str) -> Result<Surgery, ManifestError> {
    if r == "empty" {
        return Ok(Surgery::empty());
    }
    if let Some(p) = r.strip_prefix("unknot:") {
        let p: i64 = p.parse().map_err(|_| input(r, "bad framing"))?;
        return Ok(Surgery::unknot(p));
    }
    Surgery::from_document(&read(base, r)?).map_err(|e| input(r, e))
}

impl Manifest {
    pub fn from_document(text: &str, base: &Path) -> Result<Self, ManifestError> {
        let mut pairings: Vec<Pairing> = Vec::new();
        let mut header = false;
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            let syntax = |msg: &str| ManifestError::Syntax { line, msg: msg.to_string() };
            match parts[0] {
                "tvk-manifest" => {
                    if parts[1..] != ["1"] {
                        return Err(syntax("unsupported version"));
                    }
                    header = true;
                }
                "pair" => {
                    if parts.len() != 3 {
                        return Err(syntax("pair takes a category and a center"));
                    }
                    let category = load_category(base, parts[1])?;
                    let center = load_modular(base, parts[2])?;
                    pairings.push(Pairing { category, center, cases: Vec::new() });
                }
                "case" => {
                    if parts.len() != 3 {
                        return Err(syntax("case takes a triangulation and a surgery presentation"));
                    }
                    let pairing = pairings.last_mut().ok_or_else(|| syntax("case before any pair"))?;
                    let triangulation = load_triangulation(base, parts[1])?;
                    let surgery = load_surgery(base, parts[2])?;
                    pairing.cases.push(Case { triangulation, surgery });
                }
                k => return Err(syntax(&format!("unknown keyword '{k}'"))),
            }
        }
        if !header {
            return Err(ManifestError::Syntax { line: 1, msg: "missing 'tvk-manifest 1' header".into() });
        }
        Ok(Manifest { pairings })
    }

    /// Every case of every pairing, in order.
    pub fn run(&self) -> Vec<(&Pairing, &Case, Result<MainTheoremReport, CenterError>)> {
        self.pairings
            .iter()
            .flat_map(|p| {
                p.cases
                    .iter()
                    .map(move |c| (p, c, verify_main_theorem(&p.category, &p.center, &c.triangulation, &c.surgery)))
            })
            .collect()
    }
}
