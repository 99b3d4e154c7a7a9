//! Spherical fusion categories presented by numbers: labels, duals,
//! dimensions, triple-space dimensions, pairing matrices and 6j tensors.
//!
//! Conventions. A triple (i, j, k) names the multiplicity space
//! H(i, j, k) = Hom(1, i ⊗ j ⊗ k). Rotations of a triple name the same space
//! and share one basis. `omega(i, j, k)` is the pairing of H(k*, j*, i*)
//! (rows) with H(i, j, k) (columns). The 6j tensor of (i, j, k, l, m, n) is
//! indexed by bases of H(m, i*, n*), H(j, i, k*), H(n, j*, l*), H(l, k, m*);
//! see [`tetra`] for the underlying graph.

pub mod builtin;
mod checks;
pub mod format;
pub mod tensor;
pub mod tetra;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use tvk_scalars::{Cyclotomic, Matrix};

pub use checks::{check_orthonormality, check_pentagon, CheckReport, Failure};
use format::{parse_document, write_flat, write_matrix, Entry};
pub use tensor::{Contraction, Tensor};

pub type Label = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("structural error: {0}")]
    Structural(String),
    #[error("numeric error at {key}: {msg}")]
    Numeric { key: String, msg: String },
}

fn numeric(key: impl Into<String>, msg: impl Into<String>) -> LoadError {
    LoadError::Numeric { key: key.into(), msg: msg.into() }
}

/// Raw category presentation, before validation.
#[derive(Clone, Debug, Default)]
pub struct CategoryData {
    pub name: String,
    pub notes: Vec<String>,
    pub labels: Vec<String>,
    pub dual: Vec<Label>,
    pub qdim: Vec<Cyclotomic>,
    pub triples: Vec<([Label; 3], usize)>,
    pub omega: Vec<([Label; 3], Matrix)>,
    pub sixj: Vec<([Label; 6], Tensor)>,
}

#[derive(Clone, Debug)]
pub struct FusionData {
    name: String,
    notes: Vec<String>,
    labels: Vec<String>,
    index: HashMap<String, Label>,
    unit: Label,
    dual: Vec<Label>,
    qdim: Vec<Cyclotomic>,
    ntrip: Vec<usize>,
    omega: Vec<Option<Matrix>>,
    omega_inv: Vec<Option<Matrix>>,
    reps: BTreeMap<[Label; 6], Tensor>,
    sixj: HashMap<[Label; 6], Tensor>,
    global_dim: Cyclotomic,
}

fn rotations(t: [Label; 3]) -> [[Label; 3]; 3] {
    [t, [t[1], t[2], t[0]], [t[2], t[0], t[1]]]
}

impl FusionData {
    pub fn new(data: CategoryData) -> Result<Self, LoadError> {
        let CategoryData { name, notes, labels, dual, qdim, triples, omega, sixj } = data;
        let nl = labels.len();
        if nl == 0 {
            return Err(LoadError::Structural("no labels".into()));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(LoadError::Structural(format!("duplicate label {l}")));
            }
        }
        let unit = *index.get("1").ok_or_else(|| LoadError::Structural("missing unit label 1".into()))?;
        if dual.len() != nl || qdim.len() != nl {
            return Err(LoadError::Structural("dual and qdim must cover every label".into()));
        }
        for i in 0..nl {
            if dual[i] >= nl || dual[dual[i]] != i {
                return Err(LoadError::Structural(format!("dual not involutive at {}", labels[i])));
            }
        }
        if dual[unit] != unit {
            return Err(LoadError::Structural("dual of 1 must be 1".into()));
        }
        if !qdim[unit].is_one() {
            return Err(numeric("qdim 1", format!("must be 1, found {}", qdim[unit])));
        }
        for i in 0..nl {
            if qdim[i].is_zero() {
                return Err(numeric(format!("qdim {}", labels[i]), "zero dimension"));
            }
            if qdim[i] != qdim[dual[i]] {
                return Err(numeric(format!("qdim {}", labels[i]), "differs from the dual's dimension"));
            }
        }
        let mut fd = FusionData {
            name,
            notes,
            labels,
            index,
            unit,
            dual,
            qdim,
            ntrip: vec![0; nl * nl * nl],
            omega: vec![None; nl * nl * nl],
            omega_inv: vec![None; nl * nl * nl],
            reps: BTreeMap::new(),
            sixj: HashMap::new(),
            global_dim: Cyclotomic::zero(),
        };
        fd.load_triples(&triples)?;
        fd.load_omega(omega)?;
        fd.load_sixj(sixj)?;
        fd.global_dim = fd.qdim.iter().map(|d| d * d).sum();
        if fd.global_dim.is_zero() {
            return Err(numeric("globalDim", "zero"));
        }
        Ok(fd)
    }

    fn tidx(&self, t: [Label; 3]) -> usize {
        let nl = self.labels.len();
        (t[0] * nl + t[1]) * nl + t[2]
    }

    fn key3(&self, t: [Label; 3]) -> String {
        format!("({}, {}, {})", self.labels[t[0]], self.labels[t[1]], self.labels[t[2]])
    }

    fn key6(&self, t: [Label; 6]) -> String {
        let names: Vec<&str> = t.iter().map(|&x| self.labels[x].as_str()).collect();
        format!("({})", names.join(", "))
    }

    /// The triple with its dual orientation: (k*, j*, i*).
    pub fn flip(&self, t: [Label; 3]) -> [Label; 3] {
        [self.dual[t[2]], self.dual[t[1]], self.dual[t[0]]]
    }

    fn load_triples(&mut self, triples: &[([Label; 3], usize)]) -> Result<(), LoadError> {
        let nl = self.labels.len();
        let mut set = vec![None; nl * nl * nl];
        for &(t, n) in triples {
            if t.iter().any(|&x| x >= nl) {
                return Err(LoadError::Structural("triple uses unknown label".into()));
            }
            for r in rotations(t) {
                let i = self.tidx(r);
                match set[i] {
                    Some(m) if m != n => return Err(numeric(format!("triple {}", self.key3(t)), "rotations disagree")),
                    _ => set[i] = Some(n),
                }
            }
        }
        self.ntrip = set.into_iter().map(|x| x.unwrap_or(0)).collect();
        let u = self.unit;
        for i in 0..nl {
            for j in 0..nl {
                for k in 0..nl {
                    let t = [i, j, k];
                    if self.n(t) != self.n(self.flip(t)) {
                        return Err(numeric(format!("triple {}", self.key3(t)), "N(i,j,k) != N(k*,j*,i*)"));
                    }
                }
                let want = usize::from(j == self.dual[i]);
                if self.n([u, i, j]) != want {
                    return Err(numeric(format!("triple {}", self.key3([u, i, j])), "unit constraint violated"));
                }
            }
        }
        for i in 0..nl {
            for j in 0..nl {
                let lhs: Cyclotomic = (0..nl)
                    .map(|k| &self.qdim[k] * Cyclotomic::from_integer(self.n([i, j, self.dual[k]]) as i64))
                    .sum();
                if lhs != &self.qdim[i] * &self.qdim[j] {
                    return Err(numeric(
                        format!("fusion {} x {}", self.labels[i], self.labels[j]),
                        "dimensions are not a fusion-ring character",
                    ));
                }
            }
        }
        Ok(())
    }

    fn load_omega(&mut self, omega: Vec<([Label; 3], Matrix)>) -> Result<(), LoadError> {
        let nl = self.labels.len();
        for (t, m) in omega {
            if t.iter().any(|&x| x >= nl) {
                return Err(LoadError::Structural("omega uses unknown label".into()));
            }
            let key = format!("omega {}", self.key3(t));
            let nt = self.n(t);
            if nt == 0 {
                if m.is_zero() {
                    continue;
                }
                return Err(numeric(key, "nonzero pairing on an inadmissible triple"));
            }
            if m.rows() != nt || m.cols() != nt {
                return Err(numeric(key, format!("expected a {nt}x{nt} matrix")));
            }
            let mt = m.transpose();
            let f = self.flip(t);
            for (r, mat) in rotations(t).into_iter().map(|r| (r, &m)).chain(rotations(f).into_iter().map(|r| (r, &mt)))
            {
                let i = self.tidx(r);
                match &self.omega[i] {
                    Some(old) if old != mat => return Err(numeric(key, "inconsistent with a symmetric entry")),
                    _ => self.omega[i] = Some(mat.clone()),
                }
            }
        }
        for i in 0..nl {
            for j in 0..nl {
                for k in 0..nl {
                    let t = [i, j, k];
                    let idx = self.tidx(t);
                    if self.ntrip[idx] == 0 {
                        continue;
                    }
                    let m = self.omega[idx]
                        .as_ref()
                        .ok_or_else(|| numeric(format!("omega {}", self.key3(t)), "missing"))?;
                    let inv =
                        m.inverse().map_err(|_| numeric(format!("omega {}", self.key3(t)), "singular pairing"))?;
                    self.omega_inv[idx] = Some(inv);
                }
            }
            let t = [self.unit, i, self.dual[i]];
            let m = self.omega(t).expect("unit triples are admissible");
            if *m != Matrix::scalar(self.qdim[i].clone()) {
                return Err(numeric(
                    format!("omega {}", self.key3(t)),
                    "unit vertices must be normalized so that omega(1, x, x*) = dim(x)",
                ));
            }
        }
        Ok(())
    }

    /// Normalized vertex triples of a 6-tuple, in slot order A, B, C, D.
    pub fn vertex_triples(&self, t: [Label; 6]) -> [[Label; 3]; 4] {
        tetra::vertex_triples(t, &self.dual)
    }

    pub fn admissible6(&self, t: [Label; 6]) -> bool {
        self.vertex_triples(t).iter().all(|&v| self.n(v) > 0)
    }

    fn sixj_dims(&self, t: [Label; 6]) -> Vec<usize> {
        self.vertex_triples(t).iter().map(|&v| self.n(v)).collect()
    }

    /// Representative of the tetrahedral symmetry class and the symmetry
    /// reaching it.
    fn representative(&self, t: [Label; 6]) -> tetra::Reading {
        tetra::readings(t, &self.dual).into_iter().min_by(|a, b| a.labels.cmp(&b.labels)).unwrap()
    }

    fn load_sixj(&mut self, sixj: Vec<([Label; 6], Tensor)>) -> Result<(), LoadError> {
        let nl = self.labels.len();
        for (t, tensor) in sixj {
            if t.iter().any(|&x| x >= nl) {
                return Err(LoadError::Structural("sixj uses unknown label".into()));
            }
            let key = format!("sixj {}", self.key6(t));
            if tensor.dims() != self.sixj_dims(t).as_slice() {
                if self.admissible6(t) || !tensor.is_zero() {
                    return Err(numeric(key, "tensor shape does not match the vertex triples"));
                }
                continue;
            }
            if !self.admissible6(t) {
                if tensor.is_zero() {
                    continue;
                }
                return Err(numeric(key, "nonzero tensor on an inadmissible 6-tuple"));
            }
            let rep = self.representative(t);
            // T_rep[b] = T_t[a] with b[slot[x]] = a[x]
            let mut perm = [0; 4];
            for x in 0..4 {
                perm[rep.slot[x]] = x;
            }
            let moved = tensor.permuted(&perm);
            match self.reps.get(&rep.labels) {
                Some(old) if *old != moved => {
                    return Err(numeric(key, "violates the tetrahedral symmetry of a stored entry"))
                }
                _ => {
                    self.reps.insert(rep.labels, moved);
                }
            }
        }
        // stabilizers must act trivially on representatives
        for (t, tensor) in &self.reps {
            for r in tetra::readings(*t, &self.dual) {
                if r.labels == *t && tensor.permuted(&r.slot) != *tensor {
                    return Err(numeric(format!("sixj {}", self.key6(*t)), "not invariant under its own symmetry"));
                }
            }
        }
        self.materialize_sixj()?;
        self.check_unit_sixj()
    }

    /// A tetrahedron with unit edges must equal the graph left after deleting
    /// them: a theta graph for one unit edge, a circle for more.
    fn check_unit_sixj(&self) -> Result<(), LoadError> {
        for (t, tensor) in &self.sixj {
            let units: Vec<usize> = (0..6).filter(|&e| t[e] == self.unit).collect();
            if units.is_empty() {
                continue;
            }
            let tri = self.vertex_triples(*t);
            let dims = tensor.dims().to_vec();
            let mut bad = false;
            tensor::for_each_index(&dims, |idx| {
                let want = if units.len() == 1 {
                    let (a, b) = tetra::EDGE_ENDS[units[0]];
                    let mut rest = (0..4).filter(|&x| x != a && x != b);
                    let (x, y) = (rest.next().unwrap(), rest.next().unwrap());
                    self.omega(tri[x]).expect("admissible")[(idx[y], idx[x])].clone()
                } else {
                    let c = (0..6).find(|&e| t[e] != self.unit).map_or(self.unit, |e| t[e]);
                    self.qdim[c].clone()
                };
                bad |= *tensor.get(idx) != want;
            });
            if bad {
                return Err(numeric(
                    format!("sixj {}", self.key6(*t)),
                    "a tetrahedron with unit edges must equal the graph left after deleting them",
                ));
            }
        }
        Ok(())
    }

    fn materialize_sixj(&mut self) -> Result<(), LoadError> {
        let nl = self.labels.len();
        let d = self.dual.clone();
        for i in 0..nl {
            for j in 0..nl {
                for k in 0..nl {
                    if self.n([j, i, d[k]]) == 0 {
                        continue;
                    }
                    for m in 0..nl {
                        for n in 0..nl {
                            if self.n([m, d[i], d[n]]) == 0 {
                                continue;
                            }
                            for l in 0..nl {
                                if self.n([n, d[j], d[l]]) == 0 || self.n([l, k, d[m]]) == 0 {
                                    continue;
                                }
                                let t = [i, j, k, l, m, n];
                                let rep = self.representative(t);
                                let base = self
                                    .reps
                                    .get(&rep.labels)
                                    .ok_or_else(|| numeric(format!("sixj {}", self.key6(rep.labels)), "missing"))?;
                                let tensor = base.permuted(&rep.slot);
                                self.sixj.insert(t, tensor);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        0..self.labels.len()
    }

    pub fn label_name(&self, l: Label) -> &str {
        &self.labels[l]
    }

    pub fn label(&self, name: &str) -> Option<Label> {
        self.index.get(name).copied()
    }

    pub fn unit(&self) -> Label {
        self.unit
    }

    pub fn dual(&self, l: Label) -> Label {
        self.dual[l]
    }

    pub fn duals(&self) -> &[Label] {
        &self.dual
    }

    pub fn dim(&self, l: Label) -> &Cyclotomic {
        &self.qdim[l]
    }

    /// N(i, j, k) = dim Hom(1, i ⊗ j ⊗ k).
    pub fn n(&self, t: [Label; 3]) -> usize {
        self.ntrip[self.tidx(t)]
    }

    /// Fusion multiplicity of k in i ⊗ j.
    pub fn fusion(&self, i: Label, j: Label, k: Label) -> usize {
        self.n([i, j, self.dual[k]])
    }

    pub fn omega(&self, t: [Label; 3]) -> Option<&Matrix> {
        self.omega[self.tidx(t)].as_ref()
    }

    /// Inverse pairing: rows index H(i, j, k), columns H(k*, j*, i*).
    pub fn omega_inv(&self, t: [Label; 3]) -> Option<&Matrix> {
        self.omega_inv[self.tidx(t)].as_ref()
    }

    /// The materialized 6j tensor, or `None` when some vertex is inadmissible.
    pub fn sixj(&self, t: [Label; 6]) -> Option<&Tensor> {
        self.sixj.get(&t)
    }

    /// Stored class representatives.
    pub fn sixj_representatives(&self) -> impl Iterator<Item = (&[Label; 6], &Tensor)> {
        self.reps.iter()
    }

    pub fn global_dim(&self) -> &Cyclotomic {
        &self.global_dim
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.ntrip.iter().all(|&n| n <= 1)
    }

    /// Raw presentation equivalent to this category.
    pub fn to_data(&self) -> CategoryData {
        let nl = self.labels.len();
        let mut triples = Vec::new();
        let mut omega = Vec::new();
        for i in 0..nl {
            for j in 0..nl {
                for k in 0..nl {
                    let t = [i, j, k];
                    let n = self.n(t);
                    if n == 0 {
                        continue;
                    }
                    let rot_min = *rotations(t).iter().min().unwrap();
                    if rot_min == t {
                        triples.push((t, n));
                    }
                    let class_min = *rotations(t).iter().chain(rotations(self.flip(t)).iter()).min().unwrap();
                    if class_min == t {
                        omega.push((t, self.omega(t).unwrap().clone()));
                    }
                }
            }
        }
        CategoryData {
            name: self.name.clone(),
            notes: self.notes.clone(),
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            qdim: self.qdim.clone(),
            triples,
            omega,
            sixj: self.reps.iter().map(|(t, x)| (*t, x.clone())).collect(),
        }
    }

    /// Canonical category document.
    pub fn to_document(&self) -> String {
        write_category(&self.to_data())
    }

    pub fn from_document(text: &str) -> Result<Self, LoadError> {
        let entries = parse_document(text)?;
        let (data, rest) = category_from_entries(&entries, &[])?;
        debug_assert!(rest.is_empty());
        Self::new(data)
    }
}

/// Serialize raw category data in the canonical layout.
pub fn write_category(d: &CategoryData) -> String {
    let mut s = String::new();
    let name = |l: Label| d.labels[l].as_str();
    let _ = writeln!(s, "tvk-category 1");
    let _ = writeln!(s, "name {}", d.name);
    for n in &d.notes {
        let _ = writeln!(s, "note {n}");
    }
    let _ = writeln!(s, "labels {}", d.labels.join(" "));
    for (i, &j) in d.dual.iter().enumerate() {
        let _ = writeln!(s, "dual {} {}", name(i), name(j));
    }
    for (i, q) in d.qdim.iter().enumerate() {
        let _ = writeln!(s, "qdim {} {q}", name(i));
    }
    for (t, n) in &d.triples {
        let _ = writeln!(s, "triple {} {} {} {n}", name(t[0]), name(t[1]), name(t[2]));
    }
    for (t, m) in &d.omega {
        let _ = write!(s, "omega {} {} {} ", name(t[0]), name(t[1]), name(t[2]));
        write_matrix(&mut s, m);
        s.push('\n');
    }
    for (t, x) in &d.sixj {
        let names: Vec<&str> = t.iter().map(|&l| name(l)).collect();
        let _ = write!(s, "sixj {} ", names.join(" "));
        write_flat(&mut s, x);
        s.push('\n');
    }
    s
}

/// Read the category part of a document; entries whose keys are listed in
/// `extra` are returned untouched, any other unknown key is an error.
pub fn category_from_entries<'a>(
    entries: &'a [Entry],
    extra: &[&str],
) -> Result<(CategoryData, Vec<&'a Entry>), LoadError> {
    let mut d = CategoryData::default();
    let mut rest = Vec::new();
    let mut index: HashMap<String, Label> = HashMap::new();
    let mut dual: Vec<Option<Label>> = Vec::new();
    let mut qdim: Vec<Option<Cyclotomic>> = Vec::new();
    let mut header = false;
    let lab = |e: &Entry, i: usize, index: &HashMap<String, Label>| -> Result<Label, LoadError> {
        let w = e.word(i)?;
        index.get(w).copied().ok_or_else(|| LoadError::Syntax { line: e.line, msg: format!("unknown label '{w}'") })
    };
    for e in entries {
        match e.key.as_str() {
            "tvk-category" => {
                e.arity(1)?;
                if e.int(0)? != 1 {
                    return Err(LoadError::Syntax { line: e.line, msg: "unsupported version".into() });
                }
                header = true;
            }
            "name" => {
                e.arity(1)?;
                d.name = e.word(0)?.to_string();
            }
            "note" => d.notes.push(e.raw.clone()),
            "labels" => {
                if !d.labels.is_empty() {
                    return Err(LoadError::Syntax { line: e.line, msg: "labels given twice".into() });
                }
                for i in 0..e.fields.len() {
                    let w = e.word(i)?.to_string();
                    if index.insert(w.clone(), i).is_some() {
                        return Err(LoadError::Structural(format!("duplicate label {w}")));
                    }
                    d.labels.push(w);
                }
                dual = vec![None; d.labels.len()];
                qdim = vec![None; d.labels.len()];
            }
            "dual" => {
                e.arity(2)?;
                let (a, b) = (lab(e, 0, &index)?, lab(e, 1, &index)?);
                dual[a] = Some(b);
            }
            "qdim" => {
                e.arity(2)?;
                let a = lab(e, 0, &index)?;
                qdim[a] = Some(e.scalar(1)?);
            }
            "triple" => {
                e.arity(4)?;
                let t = [lab(e, 0, &index)?, lab(e, 1, &index)?, lab(e, 2, &index)?];
                let n = e.int(3)?;
                if n < 0 {
                    return Err(LoadError::Syntax { line: e.line, msg: "negative dimension".into() });
                }
                d.triples.push((t, n as usize));
            }
            "omega" => {
                e.arity(4)?;
                let t = [lab(e, 0, &index)?, lab(e, 1, &index)?, lab(e, 2, &index)?];
                d.omega.push((t, e.matrix(3)?));
            }
            "sixj" => {
                e.arity(7)?;
                let mut t = [0; 6];
                for (s, slot) in t.iter_mut().enumerate() {
                    *slot = lab(e, s, &index)?;
                }
                let flat = e.flat(6)?;
                // the shape is implied by the triples; store flat for now
                d.sixj.push((t, Tensor::from_data(vec![flat.len()], flat)));
            }
            k if extra.contains(&k) => rest.push(e),
            k => return Err(LoadError::Syntax { line: e.line, msg: format!("unknown keyword '{k}'") }),
        }
    }
    if !header {
        return Err(LoadError::Structural("missing 'tvk-category 1' header".into()));
    }
    for (i, l) in d.labels.iter().enumerate() {
        d.dual.push(dual[i].ok_or_else(|| LoadError::Structural(format!("no dual given for {l}")))?);
        d.qdim.push(qdim[i].clone().ok_or_else(|| LoadError::Structural(format!("no qdim given for {l}")))?);
    }
    // reshape 6j entries now that N is known
    let nl = d.labels.len();
    let mut ntrip = vec![0usize; nl * nl * nl];
    for &(t, n) in &d.triples {
        for r in rotations(t) {
            ntrip[(r[0] * nl + r[1]) * nl + r[2]] = n;
        }
    }
    for (t, x) in d.sixj.iter_mut() {
        let dims: Vec<usize> =
            tetra::vertex_triples(*t, &d.dual).iter().map(|v| ntrip[(v[0] * nl + v[1]) * nl + v[2]]).collect();
        if dims.iter().product::<usize>() == x.len() {
            *x = Tensor::from_data(dims, x.data().to_vec());
        }
    }
    Ok((d, rest))
}
