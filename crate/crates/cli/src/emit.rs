// SPDX-License-Identifier: Apache-2.0

//! CSV and JSON writers with a fixed column contract.

use std::io::{self, Write};

use crate::args::{Format, MeasureSet, Variants};
use crate::sweep::OutputRecord;

pub const BASE_COLUMNS: [&str; 14] =
    ["N", "jx", "jy", "r", "h", "n1", "x_odd", "x_even", "C12", "C23", "D12", "D23", "Eglob", "MS"];
pub const DERIVATIVE_COLUMNS: [&str; 6] = ["dC12_dh", "dC23_dh", "dD12_dh", "dEglob_dh", "dMS_dh", "dMS_dr"];
pub const EQ23_COLUMNS: [&str; 2] = ["C12_eq23_paper_variant", "C23_eq23_paper_variant"];
pub const ELLIPTIC_COLUMNS: [&str; 2] = ["C12_elliptic_paper_variant", "C23_elliptic_paper_variant"];

/// Formats like C's `%.12g`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_owned()
        } else if x > 0.0 {
            "inf".to_owned()
        } else {
            "-inf".to_owned()
        };
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        trim_zeros(&format!("{x:.*}", (11 - exp) as usize)).to_owned()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn header(measures: &MeasureSet, variants: &Variants) -> Vec<&'static str> {
    let mut cols = BASE_COLUMNS.to_vec();
    if measures.derivatives {
        cols.extend(DERIVATIVE_COLUMNS);
    }
    if variants.eq23 {
        cols.extend(EQ23_COLUMNS);
    }
    if variants.elliptic {
        cols.extend(ELLIPTIC_COLUMNS);
    }
    cols
}

/// Cell values in [`header`] order; `None` marks an unselected or undefined cell.
pub fn row(rec: &OutputRecord, measures: &MeasureSet, variants: &Variants) -> Vec<Option<f64>> {
    let m = &rec.record;
    let pick = |on: bool, v: f64| on.then_some(v);
    let mut cells = vec![
        Some(rec.n_sites as f64),
        Some(rec.jx),
        Some(rec.jy),
        Some(rec.r),
        Some(rec.h),
        pick(measures.correlators, m.n1),
        pick(measures.correlators, m.x_odd),
        pick(measures.correlators, m.x_even),
        pick(measures.concurrence, m.c_odd),
        pick(measures.concurrence, m.c_even),
        pick(measures.discord, m.d_odd),
        pick(measures.discord, m.d_even),
        pick(measures.global, m.e_global),
        pick(measures.multispecies, m.ms_density),
    ];
    if measures.derivatives {
        let d = rec.derivatives.unwrap_or_default();
        cells.extend([d.dc12_dh, d.dc23_dh, d.dd12_dh, d.deglob_dh, d.dms_dh, d.dms_dr].map(Some));
    }
    for (on, pair) in [(variants.eq23, rec.variants.eq23), (variants.elliptic, rec.variants.elliptic)] {
        if on {
            cells.extend([pair.map(|p| p.0), pair.map(|p| p.1)]);
        }
    }
    cells
}

pub fn write_csv<W: Write>(
    out: &mut W,
    records: &[OutputRecord],
    measures: &MeasureSet,
    variants: &Variants,
) -> io::Result<()> {
    writeln!(out, "{}", header(measures, variants).join(","))?;
    for rec in records {
        let cells: Vec<String> =
            row(rec, measures, variants).into_iter().map(|c| c.map(format_number).unwrap_or_default()).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_json<W: Write>(
    out: &mut W,
    records: &[OutputRecord],
    measures: &MeasureSet,
    variants: &Variants,
) -> io::Result<()> {
    let cols = header(measures, variants);
    write!(out, "[")?;
    for (i, rec) in records.iter().enumerate() {
        write!(out, "{}\n  {{", if i == 0 { "" } else { "," })?;
        for (j, (name, cell)) in cols.iter().zip(row(rec, measures, variants)).enumerate() {
            let value = cell.map(format_number).unwrap_or_else(|| "null".to_owned());
            write!(out, "{}\"{name}\": {value}", if j == 0 { "" } else { ", " })?;
        }
        write!(out, "}}")?;
    }
    writeln!(out, "{}]", if records.is_empty() { "" } else { "\n" })
}

pub fn emit<W: Write>(
    out: &mut W,
    records: &[OutputRecord],
    format: Format,
    measures: &MeasureSet,
    variants: &Variants,
) -> io::Result<()> {
    match format {
        Format::Csv => write_csv(out, records, measures, variants),
        Format::Json => write_json(out, records, measures, variants),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g12() {
        let cases = [
            (0.5, "0.5"),
            (1.0, "1"),
            (100.0, "100"),
            (-2.0, "-2"),
            (1.0 / 3.0, "0.333333333333"),
            (2.0f64.sqrt(), "1.41421356237"),
            (1e-5, "1e-05"),
            (1.23456789e-7, "1.23456789e-07"),
            (0.0001, "0.0001"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (-0.0, "0"),
            (0.358_768_927_123_456_7, "0.358768927123"),
            (9.999_999_999_999_9, "10"),
        ];
        for (x, want) in cases {
            assert_eq!(format_number(x), want, "{x:e}");
        }
    }

    #[test]
    fn header_contract() {
        let mut m = MeasureSet::ALL;
        assert_eq!(header(&m, &Variants::default()).join(","), "N,jx,jy,r,h,n1,x_odd,x_even,C12,C23,D12,D23,Eglob,MS");
        m.derivatives = true;
        let v = Variants { eq23: true, elliptic: false };
        assert!(header(&m, &v).join(",").ends_with(
            "MS,dC12_dh,dC23_dh,dD12_dh,dEglob_dh,dMS_dh,dMS_dr,C12_eq23_paper_variant,C23_eq23_paper_variant"
        ));
    }
}
