use std::path::Path;

use tvk_center::{drinfeld_double_abelian, AbelianGroup, Manifest};
use tvk_fusion_data::{check_orthonormality, check_pentagon, CheckReport, FusionData};
use tvk_modular_rt::builtin as modular_builtin;
use tvk_modular_rt::{rt_invariant, Braid, BraidRep, ModularData, Surgery};
use tvk_scalars::{int, Matrix};
use tvk_state_sum::{genus_projector, s2_projector, tv_invariant_with, Options};

use crate::report::{Input, RunReport};
use crate::{source, Command, InputError};

/// Failing tuples listed in a report before the rest are summarized.
const SHOWN_FAILURES: usize = 5;

pub(crate) fn dispatch(cmd: &Command, report: &mut RunReport) -> Result<(), InputError> {
    match cmd {
        Command::Validate { category, modular } => validate(category, modular.as_deref(), report),
        Command::Tv { category, triangulation, builtin } => {
            tv(category, triangulation.as_deref(), builtin.as_deref(), report)
        }
        Command::Rt { modular, surgery } => rt(modular, surgery, report),
        Command::Verify { manifest } => verify(manifest, report),
        Command::Dim { category, genus } => dim(category, *genus, report),
        Command::Export { dir } => {
            let written = export(dir).map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
            report.notes.push(format!("wrote {} files to {}", written, dir.display()));
            Ok(())
        }
    }
}

fn record_identity(report: &mut RunReport, prefix: &str, r: &CheckReport) {
    let mut detail = format!("{} tuples checked", r.checked);
    if !r.failures.is_empty() {
        let shown: Vec<String> =
            r.failures.iter().take(SHOWN_FAILURES).map(|f| format!("({})", f.tuple.join(", "))).collect();
        detail = format!("{} of {} tuples fail: {}", r.failures.len(), r.checked, shown.join(" "));
        if r.failures.len() > SHOWN_FAILURES {
            detail += " ...";
        }
    }
    report.check(&format!("{prefix}{}", r.identity), r.passed(), detail);
}

fn check_category(report: &mut RunReport, prefix: &str, f: &FusionData) {
    record_identity(report, prefix, &check_pentagon(f));
    record_identity(report, prefix, &check_orthonormality(f));
}

fn validate(category: &str, modular: Option<&str>, report: &mut RunReport) -> Result<(), InputError> {
    let (f, input) = source::category(category)?;
    report.inputs.push(input);
    match f {
        Ok(f) => {
            report.check("load", true, format!("{} with {} labels", f.name(), f.rank()));
            report.scalar("global dimension", f.global_dim());
            check_category(report, "", &f);
        }
        Err(e) => report.check("load", false, e.to_string()),
    }
    if let Some(m) = modular {
        let (m, input) = source::modular(m)?;
        report.inputs.push(input);
        match m {
            Ok(m) => check_modular(report, &m),
            Err(e) => report.check("modular: load", false, e.to_string()),
        }
    }
    Ok(())
}

fn check_modular(report: &mut RunReport, m: &ModularData) {
    let f = m.base();
    report.check("modular: load", true, format!("{} with {} labels; balancing verified", m.name(), f.rank()));
    check_category(report, "modular: ", f);
    let s = m.s_matrix();
    report.check("modular: S symmetric", s.is_symmetric(), "");
    report.check("modular: S invertible", s.rank() == s.rows(), format!("rank {} of {}", s.rank(), s.rows()));
    let first_row = f.labels().all(|i| &s[(f.unit(), i)] == f.dim(i));
    report.check("modular: S_1i = d_i", first_row, "");
    let mut c = Matrix::zeros(f.rank(), f.rank());
    for i in f.labels() {
        c[(i, f.dual(i))] = f.global_dim().clone();
    }
    report.check("modular: S^2 = D C", (s * s) == c, "");
    let (plus, minus) = m.gauss_sums();
    report.scalar("Δ+", plus);
    report.scalar("Δ-", minus);
    report.check("modular: Δ+ Δ- = D", &(plus * minus) == f.global_dim(), "");
    report.notes.push(if m.is_anomaly_free() {
        "anomaly free: Δ+ = Δ-, so the surgery invariant is defined".into()
    } else {
        "anomalous: Δ+ ≠ Δ-, so the surgery invariant is not defined".into()
    });
    let (ok, checked) = braid_relations(m);
    report.check("modular: braid relations", ok, format!("{checked} colored 3-strand spaces"));
}

/// σ1σ2σ1 = σ2σ1σ2 and σ1σ1⁻¹ = 1 on every colored 3-strand space.
fn braid_relations(m: &ModularData) -> (bool, usize) {
    let f = m.base();
    let rep = BraidRep::new(m);
    let l = Braid::new(3, vec![1, 2, 1]).expect("valid");
    let r = Braid::new(3, vec![2, 1, 2]).expect("valid");
    let inv = Braid::new(3, vec![1, -1]).expect("valid");
    let mut ok = true;
    let mut checked = 0;
    for a in f.labels() {
        for b in f.labels() {
            for c in f.labels() {
                for x in f.labels() {
                    let cols = [a, b, c];
                    let n = rep.basis(&cols, x).len();
                    if n == 0 {
                        continue;
                    }
                    checked += 1;
                    let same = |p: &Braid, q: &Matrix| rep.matrix(p, &cols, x).map(|v| &v == q).unwrap_or(false);
                    match rep.matrix(&r, &cols, x) {
                        Ok(rm) => ok &= same(&l, &rm),
                        Err(_) => ok = false,
                    }
                    ok &= same(&inv, &Matrix::identity(n));
                }
            }
        }
    }
    (ok, checked)
}

fn loaded(f: Result<FusionData, tvk_fusion_data::LoadError>, input: &Input) -> Result<FusionData, InputError> {
    f.map_err(|e| InputError(format!("{}: {e}", input.source)))
}

fn tv(
    category: &str,
    triangulation: Option<&str>,
    builtin: Option<&str>,
    report: &mut RunReport,
) -> Result<(), InputError> {
    let (f, input) = source::category(category)?;
    let f = loaded(f, &input)?;
    report.inputs.push(input);
    let t_ref = match (triangulation, builtin) {
        (Some(t), None) => t.to_string(),
        (None, Some(b)) => format!("builtin:{b}"),
        _ => return Err(InputError("give exactly one of a triangulation file and --builtin".into())),
    };
    let (t, input) = source::triangulation(&t_ref)?;
    report.inputs.push(input);
    let r = tv_invariant_with(&f, &t, Options { threads: 0 }).map_err(|e| InputError(e.to_string()))?;
    report.scalar("tv", &r.value);
    report.notes.push(format!(
        "{} on {} with {} tets: {} admissible colorings",
        f.name(),
        t.name(),
        t.tet_count(),
        r.admissible_colorings
    ));
    Ok(())
}

fn rt(modular: &str, surgery: &str, report: &mut RunReport) -> Result<(), InputError> {
    let (m, input) = source::modular(modular)?;
    let m = m.map_err(|e| InputError(format!("{}: {e}", input.source)))?;
    report.inputs.push(input);
    let (s, input) = source::surgery(surgery)?;
    report.inputs.push(input);
    let v = rt_invariant(&m, &s).map_err(|e| InputError(e.to_string()))?;
    report.scalar("rt", &v);
    report.notes.push(format!("{} on {} with {} components", m.name(), s.name, s.components()));
    Ok(())
}

fn verify(manifest: &str, report: &mut RunReport) -> Result<(), InputError> {
    let (text, input, path) = source::read(manifest, "manifest")?;
    report.inputs.push(input);
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    for line in text.lines() {
        let mut words = line.split_whitespace();
        let role = match words.next() {
            Some("pair") => ["category", "center"],
            Some("case") => ["triangulation", "surgery"],
            _ => continue,
        };
        for (w, role) in words.zip(role) {
            let p = base.join(w);
            let seen = report.inputs.iter().any(|i| i.source == p.display().to_string());
            if let (false, Ok(t)) = (seen, std::fs::read_to_string(&p)) {
                report.inputs.push(Input::new(role, &p.display().to_string(), &t));
            }
        }
    }
    let m = Manifest::from_document(&text, &base).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    for (i, (pairing, case, outcome)) in m.run().into_iter().enumerate() {
        let name = format!(
            "{} vs {}: {} / {}",
            pairing.category.name(),
            pairing.center.name(),
            case.triangulation.name(),
            case.surgery.name
        );
        match outcome {
            Ok(r) => {
                report.scalar(&format!("case {} tv", i + 1), &r.lhs);
                report.scalar(&format!("case {} rt", i + 1), &r.rhs);
                report.check(&name, r.equal, if r.equal { String::new() } else { "invariants differ".into() });
            }
            Err(e) => return Err(InputError(format!("{name}: {e}"))),
        }
    }
    Ok(())
}

fn dim(category: &str, genus: usize, report: &mut RunReport) -> Result<(), InputError> {
    let (f, input) = source::category(category)?;
    let f = loaded(f, &input)?;
    report.inputs.push(input);
    let err = |e: tvk_state_sum::StateSumError| InputError(e.to_string());
    let (rank, idempotent, size) = if genus == 0 {
        let p = s2_projector(&f).map_err(err)?;
        (p.rank(), (&p * &p) == p, p.rows())
    } else {
        let p = genus_projector(&f, genus).map_err(err)?;
        (p.rank(), p.is_idempotent(), p.matrix.rows())
    };
    report.scalar(&format!("dim genus {genus}"), &int(rank as i64));
    report.check("projector idempotent", idempotent, format!("{size} x {size} on the skeleton basis"));
    Ok(())
}

/// Every shipped data file as (file name, contents).
pub fn shipped_files() -> Vec<(String, String)> {
    use tvk_fusion_data::builtin as cats;
    let mut out = Vec::new();
    for (name, f) in [
        ("fibonacci", cats::fibonacci()),
        ("ising", cats::ising()),
        ("vecZ2", cats::vec_zn(2)),
        ("vecZ3", cats::vec_zn(3)),
    ] {
        out.push((format!("{name}.cat"), f.to_document()));
    }
    for (name, m) in [
        ("fibonacci", modular_builtin::fibonacci_modular()),
        ("ising", modular_builtin::ising_modular()),
        ("fibonacci-square", modular_builtin::by_name("fibonacci-square").expect("builtin")),
        ("toric", drinfeld_double_abelian(&AbelianGroup::cyclic(2))),
        ("doubleZ3", drinfeld_double_abelian(&AbelianGroup::cyclic(3))),
    ] {
        out.push((format!("{name}.mod"), m.to_document()));
    }
    for (file, name) in [
        ("s3", "s3_1tet"),
        ("s3_2tet", "s3_2tet"),
        ("s1xs2", "s1xs2"),
        ("t3", "t3"),
        ("lens21", "lens(2,1)"),
        ("lens31", "lens(3,1)"),
        ("lens41", "lens(4,1)"),
        ("lens51", "lens(5,1)"),
        ("lens52", "lens(5,2)"),
    ] {
        out.push((format!("{file}.tri"), tvk_manifold::builtin(name).expect("builtin").to_document()));
    }
    out.push(("empty.srg".into(), Surgery::empty().to_document()));
    for p in 0..=5 {
        out.push((format!("unknot_framing{p}.srg"), Surgery::unknot(p).to_document()));
    }
    let hopf = Surgery::new("lens(3,2)", Braid::new(2, vec![1, 1]).expect("valid"), vec![2, 2]).expect("valid");
    out.push(("hopf_2_2.srg".into(), hopf.to_document()));
    out.push(("main_theorem.manifest".into(), MAIN_THEOREM.into()));
    out
}

const MAIN_THEOREM: &str = "tvk-manifest 1
# Vec_Z2 against its double, the toric code
pair vecZ2.cat toric.mod
case s3.tri empty.srg
case s1xs2.tri unknot_framing0.srg
case lens21.tri unknot_framing2.srg
case lens31.tri unknot_framing3.srg
case lens41.tri unknot_framing4.srg
case lens51.tri unknot_framing5.srg
# Vec_Z3 against its double
pair vecZ3.cat doubleZ3.mod
case s3.tri empty.srg
case s1xs2.tri unknot_framing0.srg
case lens31.tri unknot_framing3.srg
# Fibonacci against Fib ⊠ mirror(Fib)
pair fibonacci.cat fibonacci-square.mod
case s3.tri empty.srg
case s1xs2.tri unknot_framing0.srg
case lens21.tri unknot_framing2.srg
case lens31.tri unknot_framing3.srg
";

/// Write the shipped data files into `dir`; returns the number written.
pub fn export(dir: &Path) -> std::io::Result<usize> {
    std::fs::create_dir_all(dir)?;
    let files = shipped_files();
    for (name, text) in &files {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(files.len())
}
