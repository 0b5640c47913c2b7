//! Line-oriented structure files.
//!
//! ```text
//! kind: semigroup
//! elements: 0 1
//! mul:
//! 0 0
//! 0 1
//! D: 1 1
//! R: 1 1
//! order:
//! 1 <= 0
//! ```
//!
//! `#` starts a comment. Category files use `comp:` with `.` for undefined
//! composites and may add `meet:`, one row per identity in index order,
//! each listing the meet with every identity. Element tokens are the names
//! from `elements:`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::category::{Category, OrderedCategory};
use crate::error::{Error, Result};
use crate::order::PartialOrder;
use crate::orders::OrderedSemigroup;
use crate::semigroup::FiniteBiunarySemigroup;
use crate::zoo;

/// A parsed structure file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureFile {
    Semigroup {
        structure: FiniteBiunarySemigroup,
        order: Option<PartialOrder>,
    },
    Category {
        category: OrderedCategory,
    },
}

impl StructureFile {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureFile::Semigroup { .. } => "semigroup",
            StructureFile::Category { .. } => "category",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            StructureFile::Semigroup { structure, .. } => structure.len(),
            StructureFile::Category { category } => category.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The semigroup with its order, when both are present.
    pub fn ordered_semigroup(&self) -> Option<Result<OrderedSemigroup>> {
        match self {
            StructureFile::Semigroup { structure, order: Some(order) } => {
                Some(OrderedSemigroup::new(structure.clone(), order.clone()))
            }
            _ => None,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

const SECTIONS: [&str; 8] = ["kind", "elements", "mul", "comp", "D", "R", "order", "meet"];

struct Section {
    line: usize,
    inline: Vec<String>,
    body: Vec<(usize, Vec<String>)>,
}

/// Parses a structure file. Orders are closed reflexively and transitively.
pub fn parse_structure(text: &str) -> Result<StructureFile> {
    let mut sections: HashMap<&'static str, Section> = HashMap::new();
    let mut current: Option<&'static str> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, rest)) = line.split_once(':') {
            let key = key.trim();
            let Some(&name) = SECTIONS.iter().find(|&&s| s == key) else {
                return Err(parse_err(line_no, format!("unknown section `{key}`")));
            };
            if sections.contains_key(name) {
                return Err(parse_err(line_no, format!("duplicate section `{name}`")));
            }
            let inline = rest.split_whitespace().map(str::to_string).collect();
            sections.insert(name, Section { line: line_no, inline, body: Vec::new() });
            current = Some(name);
        } else {
            let Some(name) = current else {
                return Err(parse_err(line_no, "content before the first section"));
            };
            let tokens = line.split_whitespace().map(str::to_string).collect();
            sections.get_mut(name).expect("current section").body.push((line_no, tokens));
        }
    }

    let kind = match sections.get("kind") {
        None => "semigroup".to_string(),
        Some(s) => match s.inline.as_slice() {
            [k] if k == "semigroup" || k == "category" => k.clone(),
            _ => return Err(parse_err(s.line, "kind must be `semigroup` or `category`")),
        },
    };
    let elements = sections
        .get("elements")
        .ok_or_else(|| parse_err(1, "missing `elements` section"))?;
    let names = elements.inline.clone();
    if names.is_empty() {
        return Err(parse_err(elements.line, "no elements"));
    }
    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if name == "." || name.contains(':') {
            return Err(parse_err(elements.line, format!("`{name}` cannot be an element name")));
        }
        if index.insert(name.as_str(), i).is_some() {
            return Err(parse_err(elements.line, format!("element `{name}` listed twice")));
        }
    }
    let n = names.len();
    let lookup = |line: usize, tok: &str| {
        index
            .get(tok)
            .copied()
            .ok_or_else(|| parse_err(line, format!("unknown element token `{tok}`")))
    };

    let unary = |key: &str| -> Result<Vec<usize>> {
        let s = sections
            .get(key)
            .ok_or_else(|| parse_err(elements.line, format!("missing `{key}` section")))?;
        if s.inline.len() != n || !s.body.is_empty() {
            return Err(parse_err(s.line, format!("`{key}` needs exactly {n} entries on one line")));
        }
        s.inline.iter().map(|t| lookup(s.line, t)).collect()
    };

    let table_rows = |key: &str, allow_undefined: bool| -> Result<Vec<Option<usize>>> {
        let s = sections
            .get(key)
            .ok_or_else(|| parse_err(elements.line, format!("missing `{key}` section")))?;
        if !s.inline.is_empty() {
            return Err(parse_err(s.line, format!("`{key}` rows start on the next line")));
        }
        if s.body.len() != n {
            return Err(parse_err(s.line, format!("`{key}` table is not square: {} rows for {n} elements", s.body.len())));
        }
        let mut out = Vec::with_capacity(n * n);
        for (line, row) in &s.body {
            if row.len() != n {
                return Err(parse_err(*line, format!("`{key}` table is not square: row has {} entries", row.len())));
            }
            for tok in row {
                if tok == "." && allow_undefined {
                    out.push(None);
                } else {
                    out.push(Some(lookup(*line, tok)?));
                }
            }
        }
        Ok(out)
    };

    let order = match sections.get("order") {
        None => None,
        Some(s) => {
            if !s.inline.is_empty() {
                return Err(parse_err(s.line, "order pairs start on the next line"));
            }
            let mut pairs = Vec::new();
            for (line, toks) in &s.body {
                match toks.as_slice() {
                    [a, op, b] if op == "<=" => pairs.push((lookup(*line, a)?, lookup(*line, b)?)),
                    _ => return Err(parse_err(*line, "order lines have the form `a <= b`")),
                }
            }
            Some(PartialOrder::from_pairs(n, pairs).map_err(|e| parse_err(s.line, order_message(e)))?)
        }
    };

    let dmap = unary("D")?;
    let rmap = unary("R")?;
    if kind == "semigroup" {
        for key in ["comp", "meet"] {
            if let Some(s) = sections.get(key) {
                return Err(parse_err(s.line, format!("`{key}` belongs in category files")));
            }
        }
        let mul = table_rows("mul", false)?.into_iter().map(|v| v.expect("total")).collect();
        let structure = FiniteBiunarySemigroup::from_flat(n, mul, dmap, rmap)?.with_names(names)?;
        return Ok(StructureFile::Semigroup { structure, order });
    }

    if let Some(s) = sections.get("mul") {
        return Err(parse_err(s.line, "category files use `comp`, not `mul`"));
    }
    let comp = table_rows("comp", true)?;
    let comp_section = &sections["comp"];
    for x in 0..n {
        for y in 0..n {
            if comp[x * n + y].is_some() && rmap[x] != dmap[y] {
                let line = comp_section.body[x].0;
                return Err(parse_err(
                    line,
                    format!("{}∘{} is defined although R({0}) ≠ D({1})", names[x], names[y]),
                ));
            }
        }
    }
    let cat = Category::new(dmap, rmap, comp)?.with_names(Some(names.clone()));
    let order = order.unwrap_or_else(|| PartialOrder::discrete(n));
    let category = match sections.get("meet") {
        None => OrderedCategory::with_derived_meet(cat, order)?,
        Some(s) => {
            let ids = cat.identities();
            if !s.inline.is_empty() || s.body.len() != ids.len() {
                return Err(parse_err(s.line, format!("`meet` needs {} rows, one per identity", ids.len())));
            }
            let mut meet = vec![None; n * n];
            for ((line, row), &e) in s.body.iter().zip(&ids) {
                if row.len() != ids.len() {
                    return Err(parse_err(*line, "`meet` table is not square"));
                }
                for (tok, &f) in row.iter().zip(&ids) {
                    if tok != "." {
                        meet[e * n + f] = Some(lookup(*line, tok)?);
                    }
                }
            }
            OrderedCategory::new(cat, order, meet).map_err(|e| parse_err(s.line, order_message(e)))?
        }
    };
    Ok(StructureFile::Category { category })
}

fn order_message(e: Error) -> String {
    match e {
        Error::Structural(m) => m,
        other => other.to_string(),
    }
}

fn element_names(names: Option<&[String]>, n: usize) -> Vec<String> {
    match names {
        Some(names) => names.to_vec(),
        None => (0..n).map(|i| i.to_string()).collect(),
    }
}

fn emit_order(out: &mut String, names: &[String], order: &PartialOrder) {
    out.push_str("order:\n");
    for (a, b) in order.covers() {
        let _ = writeln!(out, "{} <= {}", names[a], names[b]);
    }
}

/// Writes a structure file; the order is written as covering pairs.
pub fn emit_structure(file: &StructureFile) -> String {
    let mut out = String::new();
    match file {
        StructureFile::Semigroup { structure: s, order } => {
            let n = s.len();
            let names = element_names(s.names(), n);
            let _ = writeln!(out, "kind: semigroup");
            let _ = writeln!(out, "elements: {}", names.join(" "));
            out.push_str("mul:\n");
            for a in 0..n {
                let row: Vec<&str> = (0..n).map(|b| names[s.mul(a, b)].as_str()).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
            let d: Vec<&str> = (0..n).map(|a| names[s.d(a)].as_str()).collect();
            let r: Vec<&str> = (0..n).map(|a| names[s.r(a)].as_str()).collect();
            let _ = writeln!(out, "D: {}", d.join(" "));
            let _ = writeln!(out, "R: {}", r.join(" "));
            if let Some(order) = order {
                emit_order(&mut out, &names, order);
            }
        }
        StructureFile::Category { category: c } => {
            let k = &c.cat;
            let n = k.len();
            let names = element_names(k.names(), n);
            let name_of = |v: Option<usize>| v.map_or(".", |v| names[v].as_str());
            let _ = writeln!(out, "kind: category");
            let _ = writeln!(out, "elements: {}", names.join(" "));
            out.push_str("comp:\n");
            for x in 0..n {
                let row: Vec<&str> = (0..n).map(|y| name_of(k.comp(x, y))).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
            let d: Vec<&str> = (0..n).map(|x| names[k.d(x)].as_str()).collect();
            let r: Vec<&str> = (0..n).map(|x| names[k.r(x)].as_str()).collect();
            let _ = writeln!(out, "D: {}", d.join(" "));
            let _ = writeln!(out, "R: {}", r.join(" "));
            emit_order(&mut out, &names, &c.order);
            let ids = k.identities();
            out.push_str("meet:\n");
            for &e in &ids {
                let row: Vec<&str> = ids.iter().map(|&f| name_of(c.meet(e, f))).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
    }
    out
}

/// Resolves `NAME` or `NAME#ORDER` against the zoo. Without a fragment the
/// first attached order is used, if any.
pub fn example_structure(spec: &str) -> Result<StructureFile> {
    let (name, fragment) = match spec.split_once('#') {
        Some((name, order)) => (name, Some(order)),
        None => (spec, None),
    };
    let entry = zoo::by_name(name)?;
    let order = match fragment {
        Some(o) => Some(
            entry
                .order(o)
                .cloned()
                .ok_or_else(|| Error::UnknownName(format!("{name}#{o}")))?,
        ),
        None => entry.orders.first().map(|(_, o)| o.clone()),
    };
    Ok(StructureFile::Semigroup { structure: entry.structure, order })
}

/// Strips the `example://` scheme, if present.
pub fn example_uri(path: &str) -> Option<&str> {
    path.strip_prefix("example://")
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
kind: semigroup   # two-element monoid
elements: 0 1
mul:
0 0
0 1
D: 1 1
R: 1 1
order:
1 <= 0
";

    #[test]
    fn parses_monoid_with_order() {
        let StructureFile::Semigroup { structure, order } = parse_structure(EXAMPLE).unwrap() else {
            panic!("semigroup expected")
        };
        assert_eq!(structure.len(), 2);
        assert_eq!(structure.mul(1, 1), 1);
        let order = order.unwrap();
        assert!(order.leq(1, 0) && !order.leq(0, 1));
    }

    #[test]
    fn antisymmetry_is_a_parse_error() {
        let text = EXAMPLE.replace("1 <= 0\n", "0 <= 1\n1 <= 0\n");
        assert!(matches!(parse_structure(&text), Err(Error::Parse { line: 8, .. })));
    }

    #[test]
    fn parse_errors() {
        let unknown = EXAMPLE.replace("D: 1 1", "D: 1 q");
        assert!(matches!(parse_structure(&unknown), Err(Error::Parse { line: 6, .. })));
        let ragged = EXAMPLE.replace("0 1\nD", "0\nD");
        assert!(matches!(parse_structure(&ragged), Err(Error::Parse { .. })));
        let missing = EXAMPLE.replace("R: 1 1\n", "");
        assert!(matches!(parse_structure(&missing), Err(Error::Parse { .. })));
        let short = EXAMPLE.replace("0 0\n0 1\n", "0 0\n");
        assert!(matches!(parse_structure(&short), Err(Error::Parse { .. })));
    }

    #[test]
    fn category_composability_is_checked() {
        let text = "\
kind: category
elements: e f x
comp:
e . x
. f .
x . .
D: e f e
R: e f f
";
        match parse_structure(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 6);
                assert!(message.contains("x∘x") || message.contains("x∘e"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        let good = text.replace("x . .", ". x .");
        let parsed = parse_structure(&good).unwrap();
        let StructureFile::Category { category } = &parsed else { panic!() };
        assert_eq!(category.cat.identities(), vec![0, 1]);
        assert!(category.meet_is_derived());
        assert_eq!(parse_structure(&emit_structure(&parsed)).unwrap(), parsed);
    }

    #[test]
    fn example_uris() {
        assert_eq!(example_uri("example://rel-2"), Some("rel-2"));
        let file = example_structure("two-element-monoid#leq2").unwrap();
        let StructureFile::Semigroup { order, .. } = file else { panic!() };
        assert!(order.unwrap().is_discrete());
        assert!(matches!(example_structure("two-element-monoid#leq9"), Err(Error::UnknownName(_))));
    }
}
