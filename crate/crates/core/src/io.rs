//! CSV serialization of sampled lines, profiles and radial fields.
//!
//! Formats: profiles use the header `s,value`, fields use `r,u0,u1`; UTF-8,
//! '.' decimal separator, one row per node.

use crate::dim::DimensionContext;
use crate::error::{Error, Result};
use crate::field::{RadialField, Tail};
use crate::profile::{Direction, RadialProfile};
use crate::quadrature::PanelGrid;
use crate::sample::SampledLine;
use std::io::{BufRead, BufWriter, Write};

pub fn write_line_csv<W: Write>(w: W, line: &SampledLine) -> Result<()> {
    let mut w = BufWriter::new(w);
    writeln!(w, "s,value")?;
    for (s, v) in line.nodes().zip(line.values()) {
        writeln!(w, "{s},{v}")?;
    }
    Ok(())
}

pub fn write_profile_csv<W: Write>(w: W, profile: &RadialProfile) -> Result<()> {
    write_line_csv(w, profile.line())
}

/// Parse `s,value` rows into a sampled line; nodes must be uniform.
pub fn read_line_csv<R: BufRead>(r: R) -> Result<SampledLine> {
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    for (idx, row) in r.lines().enumerate() {
        let row = row?;
        let row = row.trim();
        if row.is_empty() {
            continue;
        }
        if idx == 0 && row.starts_with('s') {
            if row != "s,value" {
                return Err(Error::Parse(format!("expected header 's,value', got '{row}'")));
            }
            continue;
        }
        let mut parts = row.split(',');
        let s = parse_f64(parts.next(), idx)?;
        let v = parse_f64(parts.next(), idx)?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("row {idx}: expected 2 columns")));
        }
        nodes.push(s);
        values.push(v);
    }
    if values.len() < 2 {
        return Err(Error::Parse("profile file holds fewer than 2 rows".into()));
    }
    let lo = nodes[0];
    let hi = *nodes.last().unwrap();
    let h = (hi - lo) / (nodes.len() as f64 - 1.0);
    for (i, &s) in nodes.iter().enumerate() {
        if (s - (lo + i as f64 * h)).abs() > 1e-9 * (hi - lo).abs().max(1.0) {
            return Err(Error::Parse(format!(
                "node {i} at s = {s} is not on the uniform grid"
            )));
        }
    }
    SampledLine::new(lo, hi, values)
}

pub fn read_profile_csv<R: BufRead>(
    r: R,
    ctx: DimensionContext,
    direction: Direction,
) -> Result<RadialProfile> {
    let line = read_line_csv(r)?;
    Ok(RadialProfile::from_line(ctx, line, direction))
}

pub fn write_field_csv<W: Write>(w: W, field: &RadialField) -> Result<()> {
    let mut w = BufWriter::new(w);
    writeln!(w, "r,u0,u1")?;
    for ((r, u0), u1) in field
        .grid()
        .nodes()
        .iter()
        .zip(field.u0())
        .zip(field.u1())
    {
        writeln!(w, "{r},{u0},{u1}")?;
    }
    Ok(())
}

/// Raw field rows; node layout is up to the caller to reconcile with a grid.
pub fn read_field_rows<R: BufRead>(r: R) -> Result<Vec<(f64, f64, f64)>> {
    let mut rows = Vec::new();
    for (idx, row) in r.lines().enumerate() {
        let row = row?;
        let row = row.trim();
        if row.is_empty() {
            continue;
        }
        if idx == 0 && row.starts_with('r') {
            if row != "r,u0,u1" {
                return Err(Error::Parse(format!("expected header 'r,u0,u1', got '{row}'")));
            }
            continue;
        }
        let mut parts = row.split(',');
        let r_ = parse_f64(parts.next(), idx)?;
        let u0 = parse_f64(parts.next(), idx)?;
        let u1 = parse_f64(parts.next(), idx)?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("row {idx}: expected 3 columns")));
        }
        rows.push((r_, u0, u1));
    }
    if rows.len() < 2 {
        return Err(Error::Parse("field file holds fewer than 2 rows".into()));
    }
    Ok(rows)
}

/// Rebuild a field on a fresh panel grid, interpolating the rows (piecewise
/// linear in r). Rows written by `write_field_csv` round-trip bit-exactly when
/// the same grid is supplied.
pub fn field_from_rows(
    ctx: DimensionContext,
    grid: PanelGrid,
    rows: &[(f64, f64, f64)],
    tail: Tail,
) -> Result<RadialField> {
    let exact = rows.len() == grid.len()
        && rows
            .iter()
            .zip(grid.nodes())
            .all(|(&(r, _, _), &g)| (r - g).abs() <= 1e-12 * g.abs().max(1.0));
    let (u0, u1): (Vec<f64>, Vec<f64>) = if exact {
        rows.iter().map(|&(_, a, b)| (a, b)).unzip()
    } else {
        grid.nodes()
            .iter()
            .map(|&r| (interp_rows(rows, r, 1), interp_rows(rows, r, 2)))
            .unzip()
    };
    RadialField::new(ctx, grid, u0, u1, tail)
}

fn interp_rows(rows: &[(f64, f64, f64)], r: f64, col: usize) -> f64 {
    let pick = |row: &(f64, f64, f64)| if col == 1 { row.1 } else { row.2 };
    if r <= rows[0].0 {
        return pick(&rows[0]);
    }
    if r >= rows[rows.len() - 1].0 {
        return pick(&rows[rows.len() - 1]);
    }
    let j = rows.partition_point(|&(x, _, _)| x < r).max(1);
    let (x0, x1) = (rows[j - 1].0, rows[j].0);
    let t = (r - x0) / (x1 - x0);
    pick(&rows[j - 1]) * (1.0 - t) + pick(&rows[j]) * t
}

fn parse_f64(tok: Option<&str>, row: usize) -> Result<f64> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("row {row}: missing column")))?;
    tok.trim()
        .parse::<f64>()
        .map_err(|e| Error::Parse(format!("row {row}: '{tok}': {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_csv_round_trip() {
        let line = SampledLine::from_fn(-1.5, 2.5, 41, |s| (s * 1.7).sin()).unwrap();
        let mut buf = Vec::new();
        write_line_csv(&mut buf, &line).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("s,value\n"));
        let back = read_line_csv(&buf[..]).unwrap();
        assert_eq!(back.len(), line.len());
        for (a, b) in back.values().iter().zip(line.values()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn empty_profile_is_parse_error() {
        let res = read_line_csv("s,value\n".as_bytes());
        assert!(matches!(res, Err(Error::Parse(_))));
        let res = read_line_csv("".as_bytes());
        assert!(matches!(res, Err(Error::Parse(_))));
    }

    #[test]
    fn nonuniform_nodes_rejected() {
        let res = read_line_csv("s,value\n0,1\n0.5,1\n2,1\n".as_bytes());
        assert!(matches!(res, Err(Error::Parse(_))));
    }

    #[test]
    fn field_csv_round_trip_same_grid() {
        let ctx = DimensionContext::new(3).unwrap();
        let grid = PanelGrid::new(2.0, 0.5, 6, &[]).unwrap();
        let f = RadialField::from_fns(
            ctx,
            grid.clone(),
            |r| (-r * r).exp(),
            |r| r * (-r * r).exp(),
            Tail::Compact,
        )
        .unwrap();
        let mut buf = Vec::new();
        write_field_csv(&mut buf, &f).unwrap();
        let rows = read_field_rows(&buf[..]).unwrap();
        let back = field_from_rows(ctx, grid, &rows, Tail::Compact).unwrap();
        for (a, b) in back.u0().iter().zip(f.u0()) {
            assert_eq!(a, b);
        }
    }
}
