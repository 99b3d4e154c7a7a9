//! Line-oriented document syntax shared by the category and modular files.
//!
//! ```text
//! document := line*
//! line     := '#' comment | keyword field*
//! field    := word | value
//! value    := scalar | '[' value (',' value)* ']'
//! scalar   := 'rat[' p/q ']' | 'cyc(' n ')[' e:c, ... ']'
//! ```
//! Fields are separated by whitespace outside brackets. The keyword `note`
//! takes the rest of its line verbatim.

use std::fmt::Write as _;

use tvk_scalars::{Cyclotomic, Matrix};

use crate::tensor::Tensor;
use crate::LoadError;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Cyclotomic),
    List(Vec<Value>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Field {
    Word(String),
    Value(Value),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub line: usize,
    pub key: String,
    pub fields: Vec<Field>,
    /// Raw remainder of the line, used by `note`.
    pub raw: String,
}

fn split_fields(s: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced brackets".into());
                }
                cur.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err("unbalanced brackets".into());
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn parse_value(s: &str) -> Result<Value, String> {
    let s = s.trim();
    if s.starts_with("rat[") || s.starts_with("cyc(") {
        return s.parse::<Cyclotomic>().map(Value::Scalar).map_err(|e| e.to_string());
    }
    let body = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| format!("expected a scalar or a list, found '{s}'"))?;
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (pos, ch) in body.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&body[start..pos]);
                start = pos + 1;
            }
            _ => {}
        }
    }
    if !body[start..].trim().is_empty() || !items.is_empty() {
        items.push(&body[start..]);
    }
    items.into_iter().map(parse_value).collect::<Result<Vec<_>, _>>().map(Value::List)
}

pub fn parse_document(text: &str) -> Result<Vec<Entry>, LoadError> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line_no = no + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let (key, rest) = match t.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (t, ""),
        };
        let mut fields = Vec::new();
        if key != "note" {
            let parts = split_fields(rest).map_err(|m| LoadError::Syntax { line: line_no, msg: m })?;
            for p in parts {
                if p.starts_with('[') || p.starts_with("rat[") || p.starts_with("cyc(") {
                    let v = parse_value(&p).map_err(|m| LoadError::Syntax { line: line_no, msg: m })?;
                    fields.push(Field::Value(v));
                } else {
                    fields.push(Field::Word(p));
                }
            }
        }
        out.push(Entry { line: line_no, key: key.to_string(), fields, raw: rest.to_string() });
    }
    Ok(out)
}

impl Entry {
    fn err(&self, msg: impl Into<String>) -> LoadError {
        LoadError::Syntax { line: self.line, msg: format!("{}: {}", self.key, msg.into()) }
    }

    pub fn word(&self, i: usize) -> Result<&str, LoadError> {
        match self.fields.get(i) {
            Some(Field::Word(w)) => Ok(w),
            _ => Err(self.err(format!("field {} should be a word", i + 1))),
        }
    }

    pub fn int(&self, i: usize) -> Result<i64, LoadError> {
        self.word(i)?.parse().map_err(|_| self.err(format!("field {} should be an integer", i + 1)))
    }

    pub fn value(&self, i: usize) -> Result<&Value, LoadError> {
        match self.fields.get(i) {
            Some(Field::Value(v)) => Ok(v),
            _ => Err(self.err(format!("field {} should be a value", i + 1))),
        }
    }

    pub fn scalar(&self, i: usize) -> Result<Cyclotomic, LoadError> {
        match self.value(i)? {
            Value::Scalar(x) => Ok(x.clone()),
            _ => Err(self.err(format!("field {} should be a scalar", i + 1))),
        }
    }

    pub fn matrix(&self, i: usize) -> Result<Matrix, LoadError> {
        let bad = || self.err("expected a matrix [[..], ..]");
        let Value::List(rows) = self.value(i)? else { return Err(bad()) };
        let mut out = Vec::new();
        for r in rows {
            let Value::List(cells) = r else { return Err(bad()) };
            let mut row = Vec::new();
            for c in cells {
                let Value::Scalar(x) = c else { return Err(bad()) };
                row.push(x.clone());
            }
            out.push(row);
        }
        if out.iter().any(|r| r.len() != out[0].len()) {
            return Err(bad());
        }
        Ok(Matrix::from_rows(out))
    }

    pub fn flat(&self, i: usize) -> Result<Vec<Cyclotomic>, LoadError> {
        let bad = || self.err("expected a flat list of scalars");
        let Value::List(cells) = self.value(i)? else { return Err(bad()) };
        cells
            .iter()
            .map(|c| match c {
                Value::Scalar(x) => Ok(x.clone()),
                _ => Err(bad()),
            })
            .collect()
    }

    pub fn arity(&self, n: usize) -> Result<(), LoadError> {
        if self.fields.len() == n {
            Ok(())
        } else {
            Err(self.err(format!("expected {n} fields, found {}", self.fields.len())))
        }
    }
}

pub fn write_matrix(out: &mut String, m: &Matrix) {
    out.push('[');
    for r in 0..m.rows() {
        if r > 0 {
            out.push_str(", ");
        }
        out.push('[');
        for c in 0..m.cols() {
            if c > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}", m[(r, c)]);
        }
        out.push(']');
    }
    out.push(']');
}

pub fn write_flat(out: &mut String, t: &Tensor) {
    out.push('[');
    for (i, x) in t.data().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
}
