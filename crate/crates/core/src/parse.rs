//! Input parsing: JSON documents or compact shorthand for multisets,
//! polynomials and index lists. Everything is canonicalized on the way in.

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::rootsets::RootMultiset;
use crate::scalar::parse_rational_at;
use crate::sylvester::SresQuery;

/// Any of the instance kinds the CLI accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Multiset(RootMultiset),
    Poly(UPoly),
    Query(SresQuery),
}

fn json_error(e: serde_json::Error, text: &str) -> Error {
    // Byte offset of the reported line/column.
    let pos = text
        .lines()
        .take(e.line().saturating_sub(1))
        .map(|l| l.len() + 1)
        .sum::<usize>()
        + e.column().saturating_sub(1);
    if e.is_data() {
        Error::Validation(e.to_string())
    } else {
        Error::Parse { pos, msg: e.to_string() }
    }
}

/// Splits on commas, yielding each piece with its byte offset.
fn pieces(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut at = 0;
    text.split(',').map(move |p| {
        let start = at;
        at += p.len() + 1;
        (start, p)
    })
}

/// `"1:2,3/2:1"`, a bare `"1,2,2"` list (multiplicity 1 each), `"{}"` or
/// the empty string for the empty multiset, or the JSON schema
/// `{"roots":[{"value":"p/q","mult":k}]}`.
pub fn parse_multiset(text: &str) -> Result<RootMultiset> {
    let t = text.trim();
    if t.starts_with('{') && t != "{}" {
        return serde_json::from_str(t).map_err(|e| json_error(e, t));
    }
    if t.is_empty() || t == "{}" {
        return Ok(RootMultiset::empty());
    }
    let mut pairs = Vec::new();
    for (at, piece) in pieces(text) {
        let (value, mult) = match piece.split_once(':') {
            Some((v, k)) => {
                let k_at = at + v.len() + 1;
                let k: usize = k.trim().parse().map_err(|_| Error::Parse {
                    pos: k_at,
                    msg: format!("`{}` is not a multiplicity", k.trim()),
                })?;
                (parse_rational_at(v, at)?, k)
            }
            None => (parse_rational_at(piece, at)?, 1),
        };
        pairs.push((value, mult));
    }
    RootMultiset::from_pairs(pairs)
}

/// JSON `{"coeffs":[...]}` or an ascending comma list `"2,-3,1"`.
pub fn parse_poly(text: &str) -> Result<UPoly> {
    let t = text.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| json_error(e, t));
    }
    if t.is_empty() {
        return Ok(UPoly::zero());
    }
    pieces(text)
        .map(|(at, p)| parse_rational_at(p, at))
        .collect::<Result<Vec<_>>>()
        .map(UPoly::new)
}

/// Comma-separated positive indices, `""` for none; sorted and checked for
/// duplicates.
pub fn parse_index_set(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "{}" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (at, p) in pieces(text) {
        let i: usize = p.trim().parse().map_err(|_| Error::Parse {
            pos: at,
            msg: format!("`{}` is not an index", p.trim()),
        })?;
        if i == 0 {
            return Err(Error::Validation("row indices start at 1".into()));
        }
        out.push(i);
    }
    out.sort_unstable();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Validation("repeated index".into()));
    }
    Ok(out)
}

/// Recognizes a JSON query `{"f":..,"g":..,"d":k}` (polynomials) or
/// `{"a":..,"b":..,"d":k}` (root multisets), a multiset JSON/shorthand, or a
/// polynomial JSON.
pub fn parse_instance(text: &str) -> Result<Parsed> {
    let t = text.trim();
    if t.starts_with('{') && t != "{}" {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| json_error(e, t))?;
        let obj = v.as_object().ok_or_else(|| Error::Validation("expected a JSON object".into()))?;
        if obj.contains_key("roots") {
            return parse_multiset(t).map(Parsed::Multiset);
        }
        if obj.contains_key("coeffs") {
            return parse_poly(t).map(Parsed::Poly);
        }
        let d = obj
            .get("d")
            .and_then(|d| d.as_u64())
            .ok_or_else(|| Error::Validation("query needs a nonnegative integer `d`".into()))?
            as usize;
        let field = |k: &str| {
            obj.get(k).ok_or_else(|| Error::Validation(format!("query is missing `{k}`")))
        };
        if obj.contains_key("f") {
            let f: UPoly = serde_json::from_value(field("f")?.clone()).map_err(|e| Error::Validation(e.to_string()))?;
            let g: UPoly = serde_json::from_value(field("g")?.clone()).map_err(|e| Error::Validation(e.to_string()))?;
            return SresQuery::new(f, g, d).map(Parsed::Query);
        }
        let a: RootMultiset = serde_json::from_value(field("a")?.clone()).map_err(|e| Error::Validation(e.to_string()))?;
        let b: RootMultiset = serde_json::from_value(field("b")?.clone()).map_err(|e| Error::Validation(e.to_string()))?;
        return SresQuery::from_roots(&a, &b, d).map(Parsed::Query);
    }
    parse_multiset(t).map(Parsed::Multiset)
}
