//! Category source strings: `fibonacci`, `su2(3)`, `cyclic:5:2`, `k=3` style
//! named parameters, JSON file paths, and `*`-separated Deligne products.

use std::collections::BTreeMap;
use std::path::Path;

use crate::category::{builtin_names, load_builtin, CategoryData};
use crate::{Error, Result};

/// A single factor: builtin family name plus integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltinSpec {
    pub name: String,
    pub params: BTreeMap<String, i64>,
}

pub fn parse_builtin_spec(text: &str) -> Result<BuiltinSpec> {
    let text = text.trim();
    let (name, args): (&str, Vec<&str>) = if let Some(open) = text.find('(') {
        let inner = text[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::InvalidArgument(format!("unbalanced parentheses in `{text}`")))?;
        (&text[..open], inner.split(',').map(str::trim).filter(|s| !s.is_empty()).collect())
    } else if let Some((name, rest)) = text.split_once(':') {
        (name, rest.split(':').map(str::trim).collect())
    } else {
        (text, Vec::new())
    };
    let name = name.trim();
    let info = builtin_names()
        .iter()
        .find(|b| b.name == name)
        .ok_or_else(|| Error::UnknownCategory(name.to_string()))?;
    if args.len() > info.params.len() {
        return Err(Error::InvalidParameter {
            family: name.into(),
            reason: format!("expected at most {} parameter(s), got {}", info.params.len(), args.len()),
        });
    }
    let mut params = BTreeMap::new();
    for (pos, arg) in args.iter().enumerate() {
        let (key, value) = match arg.split_once('=') {
            Some((k, v)) => (k.trim().to_string(), v.trim()),
            None => (info.params[pos].to_string(), *arg),
        };
        if !info.params.contains(&key.as_str()) {
            return Err(Error::InvalidParameter { family: name.into(), reason: format!("unknown parameter `{key}`") });
        }
        let v = value.parse::<i64>().map_err(|_| Error::InvalidParameter {
            family: name.into(),
            reason: format!("`{value}` is not an integer"),
        })?;
        params.insert(key, v);
    }
    Ok(BuiltinSpec { name: name.to_string(), params })
}

fn load_factor(text: &str) -> Result<CategoryData> {
    let t = text.trim();
    if t.ends_with(".json") || Path::new(t).is_file() {
        return CategoryData::from_json_file(t);
    }
    let spec = parse_builtin_spec(t)?;
    load_builtin(&spec.name, &spec.params)
}

/// Splits on top-level `*` (not inside parentheses).
pub fn split_product(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' | '×' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// Loads a category from a source string.
pub fn load_category(text: &str) -> Result<CategoryData> {
    let mut factors = split_product(text).into_iter().map(load_factor);
    let first = factors.next().expect("split yields at least one piece")?;
    factors.try_fold(first, |acc, f| Ok(CategoryData::product(&acc, &f?)))
}
