//! CSV and gnuplot sidecar emission.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use crate::sweep::SweepTable;

/// Significant digits in every CSV number.
pub const SIGNIFICANT_DIGITS: usize = 9;

/// `printf("%.9g")`: fixed notation for exponents in `[-4, 9)`, otherwise
/// scientific, trailing zeros removed.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let p = SIGNIFICANT_DIGITS;
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn to_csv(table: &SweepTable) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(|&v| format_number(v)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Gnuplot script that reads `csv_name` from its own directory.
pub fn gnuplot_script(table: &SweepTable, csv_name: &str) -> String {
    let mut s = String::new();
    let axes = table.columns.len() - 1;
    let value = &table.columns[axes];
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set key autotitle columnhead");
    let _ = writeln!(s, "set xlabel '{}'", table.columns[0]);
    if axes == 1 {
        let _ = writeln!(s, "set ylabel '{value}'");
        let _ = writeln!(s, "plot '{csv_name}' using 1:2 with lines");
    } else {
        let inner = table
            .rows
            .iter()
            .take_while(|r| r[0] == table.rows[0][0])
            .count();
        let outer = table.rows.len() / inner.max(1);
        let _ = writeln!(s, "set ylabel '{}'", table.columns[1]);
        let _ = writeln!(s, "set zlabel '{value}'");
        let _ = writeln!(s, "set dgrid3d {inner},{outer}");
        let _ = writeln!(s, "set pm3d");
        let _ = writeln!(s, "splot '{csv_name}' using 1:2:3 with pm3d");
    }
    s
}

/// Writes `table` to `path` and a `.gp` script beside it.
pub fn write_outputs(table: &SweepTable, path: &Path) -> io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, to_csv(table))?;
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    std::fs::write(path.with_extension("gp"), gnuplot_script(table, &name))
}
