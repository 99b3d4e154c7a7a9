//! Modular data files: a category document followed by `twist a v` and
//! `rsym a b k [[..]]` lines.

use std::collections::HashMap;
use std::fmt::Write as _;

use tvk_fusion_data::format::{parse_document, write_matrix};
use tvk_fusion_data::{category_from_entries, FusionData, LoadError};

use crate::{ModularData, ModularError};

pub(crate) fn write(m: &ModularData) -> String {
    let f = m.base();
    let mut s = f.to_document();
    for i in f.labels() {
        let _ = writeln!(s, "twist {} {}", f.label_name(i), m.twist(i));
    }
    let mut keys: Vec<_> = m.rsym().keys().copied().collect();
    keys.sort_unstable();
    for t in keys {
        let _ = write!(s, "rsym {} {} {} ", f.label_name(t[0]), f.label_name(t[1]), f.label_name(t[2]));
        write_matrix(&mut s, &m.rsym()[&t]);
        s.push('\n');
    }
    s
}

pub(crate) fn read(text: &str) -> Result<ModularData, ModularError> {
    let entries = parse_document(text)?;
    let (data, rest) = category_from_entries(&entries, &["twist", "rsym"])?;
    let f = FusionData::new(data)?;
    let syntax = |line: usize, msg: String| ModularError::Load(LoadError::Syntax { line, msg });
    let mut twist = vec![None; f.rank()];
    let mut rsym = HashMap::new();
    for e in rest {
        let lab = |i: usize| -> Result<usize, ModularError> {
            let w = e.word(i)?;
            f.label(w).ok_or_else(|| syntax(e.line, format!("unknown label '{w}'")))
        };
        match e.key.as_str() {
            "twist" => {
                e.arity(2)?;
                twist[lab(0)?] = Some(e.scalar(1)?);
            }
            _ => {
                e.arity(4)?;
                let t = [lab(0)?, lab(1)?, lab(2)?];
                if rsym.insert(t, e.matrix(3)?).is_some() {
                    return Err(syntax(e.line, "rsym given twice".into()));
                }
            }
        }
    }
    let twist = twist
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| ModularError::Data(format!("no twist for {}", f.label_name(i)))))
        .collect::<Result<Vec<_>, _>>()?;
    ModularData::new(f, rsym, twist)
}
