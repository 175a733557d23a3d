//! Parsing of points and known values typed on the command line.

use rattrig::{DynPoint, FieldElement, FieldSpec, KnownValues};

use crate::error::CliError;

/// `"x,y x,y x,y"`; coordinates use the exact grammar (`-3/4`).
pub fn parse_points(field: &FieldSpec, input: &str) -> Result<Vec<DynPoint>, CliError> {
    input
        .split_whitespace()
        .map(|token| {
            let (x, y) = token
                .split_once(',')
                .ok_or_else(|| CliError::Parse(format!("point {token:?} is not of the form x,y")))?;
            Ok(DynPoint::new(field.parse_value(x)?, field.parse_value(y)?))
        })
        .collect()
}

pub fn parse_triangle(field: &FieldSpec, input: &str) -> Result<[DynPoint; 3], CliError> {
    let points = parse_points(field, input)?;
    let n = points.len();
    points
        .try_into()
        .map_err(|_| CliError::Parse(format!("expected three points, got {n}")))
}

/// One entry of a value list: `value` or `Q2=value` / `s1=value`.
fn split_entry(entry: &str, prefix: char) -> Result<(Option<usize>, &str), CliError> {
    let Some((name, value)) = entry.split_once('=') else {
        return Ok((None, entry));
    };
    let name = name.trim();
    let index = name
        .strip_prefix(prefix)
        .or_else(|| name.strip_prefix(prefix.to_ascii_uppercase()))
        .or_else(|| name.strip_prefix(prefix.to_ascii_lowercase()))
        .and_then(|i| i.parse::<usize>().ok())
        .filter(|i| (1..=3).contains(i))
        .ok_or_else(|| CliError::Parse(format!("bad name {name:?}, expected {prefix}1, {prefix}2 or {prefix}3")))?;
    Ok((Some(index), value))
}

fn parse_list(
    field: &FieldSpec,
    lists: &[String],
    prefix: char,
) -> Result<Vec<(Option<usize>, FieldElement)>, CliError> {
    let mut out = Vec::new();
    for list in lists {
        for entry in list.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (index, value) = split_entry(entry, prefix)?;
            out.push((index, field.parse_value(value)?));
        }
    }
    Ok(out)
}

/// Builds the known values for `solve`.
///
/// Named entries (`Q2=68`, `s1=1/2`) go where they say. Unnamed spreads fill
/// `s1, s2, s3` in order. Unnamed quadrances fill `Q1, Q2, Q3` in order,
/// except that two unnamed quadrances next to a single spread `s_i` are taken
/// to be the sides meeting at `A_i`.
pub fn parse_known(
    field: &FieldSpec,
    quadrances: &[String],
    spreads: &[String],
) -> Result<KnownValues<FieldElement>, CliError> {
    let qs = parse_list(field, quadrances, 'Q')?;
    let ss = parse_list(field, spreads, 's')?;
    let mut known = KnownValues::default();

    let mut next = 1;
    for (index, value) in ss {
        let i = index.unwrap_or(next);
        if i > 3 {
            return Err(CliError::Parse("more than three spreads".into()));
        }
        if known.spreads[i - 1].replace(value).is_some() {
            return Err(CliError::Parse(format!("s{i} given twice")));
        }
        next = i + 1;
    }

    let unnamed = qs.iter().filter(|(i, _)| i.is_none()).count();
    let given_spreads: Vec<usize> = (1..=3).filter(|&i| known.spreads[i - 1].is_some()).collect();
    let mut slots: Vec<usize> = match (unnamed, given_spreads.as_slice()) {
        (2, [vertex]) if qs.len() == 2 => (1..=3).filter(|i| i != vertex).collect(),
        _ => (1..=3).collect(),
    };
    for (index, value) in qs {
        let i = match index {
            Some(i) => i,
            None => {
                if slots.is_empty() {
                    return Err(CliError::Parse("more than three quadrances".into()));
                }
                slots.remove(0)
            }
        };
        slots.retain(|&s| s != i);
        if known.quadrances[i - 1].replace(value).is_some() {
            return Err(CliError::Parse(format!("Q{i} given twice")));
        }
    }
    Ok(known)
}
