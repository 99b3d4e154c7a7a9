//! Resolving command-line references to files or builtins.

use std::path::{Path, PathBuf};

use tvk_fusion_data::{FusionData, LoadError};
use tvk_manifold::Triangulation;
use tvk_modular_rt::{ModularData, ModularError, Surgery};

use crate::report::Input;
use crate::InputError;

/// `TVK_DATA_DIR` if set, else the `data/` directory of the source tree.
pub fn data_dir() -> PathBuf {
    match std::env::var_os("TVK_DATA_DIR") {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

/// A path as given, or else relative to the data directory.
pub fn locate(arg: &str) -> Result<PathBuf, InputError> {
    let direct = PathBuf::from(arg);
    if direct.is_file() {
        return Ok(direct);
    }
    let shipped = data_dir().join(arg);
    if shipped.is_file() {
        return Ok(shipped.canonicalize().unwrap_or(shipped));
    }
    Err(InputError(format!("{arg}: no such file (also tried {})", shipped.display())))
}

pub fn read(arg: &str, role: &str) -> Result<(String, Input, PathBuf), InputError> {
    let path = locate(arg)?;
    let text = std::fs::read_to_string(&path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let input = Input::new(role, &path.display().to_string(), &text);
    Ok((text, input, path))
}

fn is_builtin(arg: &str) -> bool {
    arg.starts_with("builtin:") || arg.starts_with("double:") || arg.starts_with("unknot:") || arg == "empty"
}

fn from_center(e: tvk_center::ManifestError) -> InputError {
    InputError(e.to_string())
}

/// A category; load errors other than syntax are returned separately so
/// that `validate` can report them as failed checks.
pub fn category(arg: &str) -> Result<(Result<FusionData, LoadError>, Input), InputError> {
    if is_builtin(arg) {
        let f = tvk_center::load_category(Path::new("."), arg).map_err(from_center)?;
        let input = Input::new("category", arg, &f.to_document());
        return Ok((Ok(f), input));
    }
    let (text, input, path) = read(arg, "category")?;
    match FusionData::from_document(&text) {
        Err(LoadError::Syntax { line, msg }) => Err(InputError(format!("{}: line {line}: {msg}", path.display()))),
        r => Ok((r, input)),
    }
}

pub fn modular(arg: &str) -> Result<(Result<ModularData, ModularError>, Input), InputError> {
    if is_builtin(arg) {
        let m = tvk_center::load_modular(Path::new("."), arg).map_err(from_center)?;
        let input = Input::new("modular", arg, &m.to_document());
        return Ok((Ok(m), input));
    }
    let (text, input, path) = read(arg, "modular")?;
    match ModularData::from_document(&text) {
        Err(ModularError::Load(LoadError::Syntax { line, msg })) => {
            Err(InputError(format!("{}: line {line}: {msg}", path.display())))
        }
        r => Ok((r, input)),
    }
}

pub fn triangulation(arg: &str) -> Result<(Triangulation, Input), InputError> {
    if is_builtin(arg) {
        let t = tvk_center::load_triangulation(Path::new("."), arg).map_err(from_center)?;
        let input = Input::new("triangulation", arg, &t.to_document());
        return Ok((t, input));
    }
    let (text, input, path) = read(arg, "triangulation")?;
    let t = Triangulation::from_document(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((t, input))
}

pub fn surgery(arg: &str) -> Result<(Surgery, Input), InputError> {
    if is_builtin(arg) {
        let s = tvk_center::load_surgery(Path::new("."), arg).map_err(from_center)?;
        let input = Input::new("surgery", arg, &s.to_document());
        return Ok((s, input));
    }
    let (text, input, path) = read(arg, "surgery")?;
    let s = Surgery::from_document(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((s, input))
}
