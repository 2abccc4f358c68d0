use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

/// Where rendered output goes. The whole document is built as one string so
/// runs with identical flags are byte-identical.
pub struct Sink {
    target: Option<PathBuf>,
}

impl Sink {
    pub fn new(target: Option<PathBuf>) -> Self {
        Sink { target }
    }

    pub fn write(self, content: &str) -> io::Result<()> {
        match self.target {
            Some(path) => fs::write(path, content),
            None => io::stdout().write_all(content.as_bytes()),
        }
    }
}

/// Left-aligned plain-text table with a header row.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String], widths: &[usize]| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    out.push_str(&fmt_row(&header_cells, &widths));
    out.push('\n');
    out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row, &widths));
        out.push('\n');
    }
    out
}
