//! Human and `key=value` output.

use skewpoly::{Fe, Field, Matrix, SkewPoly};

pub struct Report {
    machine: bool,
    out: String,
}

impl Report {
    pub fn new(machine: bool) -> Self {
        Report {
            machine,
            out: String::new(),
        }
    }

    pub fn into_string(self) -> String {
        self.out
    }

    fn line(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }

    /// A plain value.
    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        let sep = if self.machine { "=" } else { ": " };
        self.line(&format!("{key}{sep}{value}"));
    }

    pub fn elem(&mut self, key: &str, f: &Field, a: Fe) {
        self.kv(key, f.format(a));
        if self.machine {
            self.kv(&format!("{key}.tuple"), f.format_tuple(a));
        }
    }

    pub fn elems(&mut self, key: &str, f: &Field, v: &[Fe]) {
        let join =
            |fmt: &dyn Fn(Fe) -> String| v.iter().map(|&a| fmt(a)).collect::<Vec<_>>().join(", ");
        self.kv(key, format!("{{{}}}", join(&|a| f.format(a))));
        if self.machine {
            self.kv(
                &format!("{key}.tuple"),
                format!("{{{}}}", join(&|a| f.format_tuple(a))),
            );
        }
    }

    pub fn poly(&mut self, key: &str, p: &SkewPoly) {
        self.kv(key, p);
        if self.machine {
            self.kv(&format!("{key}.tuple"), p.to_tuple_string());
        }
    }

    pub fn matrix(&mut self, key: &str, m: &Matrix) {
        let f = m.field();
        let row =
            |r: &[Fe], fmt: &dyn Fn(Fe) -> String| r.iter().map(|&a| fmt(a)).collect::<Vec<_>>();
        if self.machine {
            self.kv(&format!("{key}.rows"), m.rows());
            self.kv(&format!("{key}.cols"), m.cols());
            for (i, r) in m.row_iter().enumerate() {
                self.kv(&format!("{key}.row{i}"), row(r, &|a| f.format(a)).join(","));
                self.kv(
                    &format!("{key}.row{i}.tuple"),
                    row(r, &|a| f.format_tuple(a)).join(";"),
                );
            }
            return;
        }
        self.line(&format!("{key} ({} x {}):", m.rows(), m.cols()));
        let cells: Vec<Vec<String>> = m.row_iter().map(|r| row(r, &|a| f.format(a))).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for r in cells {
            let padded: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            self.line(&format!("  [{}]", padded.join(" ")));
        }
    }
}
