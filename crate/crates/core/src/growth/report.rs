use std::fmt::Write;

use num::BigRational;

use crate::exactalg::{RatMatrix, SeriesMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// Truncated series carried to the given top degree.
    Truncated(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthData {
    Exact(RatMatrix),
    Truncated(SeriesMatrix),
}

impl GrowthData {
    pub fn size(&self) -> (usize, usize) {
        match self {
            GrowthData::Exact(m) => (m.rows(), m.cols()),
            GrowthData::Truncated(m) => (m.rows(), m.cols()),
        }
    }
}

/// A cell of `c̄·G` that is not `δ`: the first bad degree in truncated mode, or the
/// exact entry found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellFailure {
    pub row: String,
    pub col: String,
    pub degree: Option<usize>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Outcome of checking `Σ_y c̄_xy G_yz = δ_xz`, plus any corollaries checked on
/// the same data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub mode: Mode,
    pub orbit_ids: Vec<String>,
    pub cbar: RatMatrix,
    pub growth: GrowthData,
    /// `None` for rows known exactly.
    pub per_row_safe_degree: Vec<Option<usize>>,
    /// Degree to which each row of the product was compared; `None` when exact.
    pub verified_degree: Vec<Option<usize>>,
    pub identity_holds: bool,
    pub failures: Vec<CellFailure>,
    pub corollaries: Vec<IdentityCheck>,
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn degree_str(d: Option<usize>) -> String {
    d.map_or_else(|| "exact".to_string(), |d| d.to_string())
}

fn series_str(s: &[BigRational], upto: usize) -> String {
    s.iter().take(upto + 1).map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl GrowthReport {
    /// True when the main identity and every corollary pass.
    pub fn all_pass(&self) -> bool {
        self.identity_holds && self.corollaries.iter().all(|c| c.holds)
    }

    fn growth_cell(&self, i: usize, j: usize) -> String {
        match &self.growth {
            GrowthData::Exact(m) => m.get(i, j).to_string(),
            GrowthData::Truncated(m) => {
                let d = m.per_row_degree()[i];
                format!("[{}] + O(t^{})", series_str(m.get(i, j), d), d + 1)
            }
        }
    }

    fn mode_str(&self) -> String {
        match self.mode {
            Mode::Exact => "exact".into(),
            Mode::Truncated(n) => format!("truncated({n})"),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let n = self.orbit_ids.len();
        writeln!(out, "mode: {}", self.mode_str()).unwrap();
        writeln!(out, "orbits: {n}").unwrap();
        writeln!(out, "{:<12} {:>10} {:>10}", "orbit", "safe", "verified").unwrap();
        for (i, id) in self.orbit_ids.iter().enumerate() {
            writeln!(
                out,
                "{:<12} {:>10} {:>10}",
                id,
                degree_str(self.per_row_safe_degree[i]),
                degree_str(self.verified_degree[i])
            )
            .unwrap();
        }
        writeln!(out, "\ncbar:").unwrap();
        for (i, x) in self.orbit_ids.iter().enumerate() {
            for (j, y) in self.orbit_ids.iter().enumerate() {
                let c = self.cbar.get(i, j);
                if !c.is_zero() {
                    writeln!(out, "  [{x}][{y}] = {c}").unwrap();
                }
            }
        }
        writeln!(out, "\nG:").unwrap();
        for (i, x) in self.orbit_ids.iter().enumerate() {
            for (j, y) in self.orbit_ids.iter().enumerate() {
                writeln!(out, "  [{x}][{y}] = {}", self.growth_cell(i, j)).unwrap();
            }
        }
        writeln!(out).unwrap();
        writeln!(out, "{}  cbar * G = I", verdict(self.identity_holds)).unwrap();
        for f in &self.failures {
            match f.degree {
                Some(d) => writeln!(out, "  cell [{}][{}]: first bad degree {d}, coefficient {}", f.row, f.col, f.found),
                None => writeln!(out, "  cell [{}][{}]: found {}", f.row, f.col, f.found),
            }
            .unwrap();
        }
        for c in &self.corollaries {
            writeln!(out, "{}  {}", verdict(c.holds), c.name).unwrap();
            if !c.holds {
                writeln!(out, "  {}", c.detail).unwrap();
            }
        }
        out
    }

    /// Line-oriented `key=value` rendering.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        writeln!(out, "mode={}", self.mode_str()).unwrap();
        writeln!(out, "orbits={}", self.orbit_ids.join(" ")).unwrap();
        for (i, id) in self.orbit_ids.iter().enumerate() {
            writeln!(out, "safe_degree[{id}]={}", degree_str(self.per_row_safe_degree[i])).unwrap();
            writeln!(out, "verified_degree[{id}]={}", degree_str(self.verified_degree[i])).unwrap();
        }
        for (i, x) in self.orbit_ids.iter().enumerate() {
            for (j, y) in self.orbit_ids.iter().enumerate() {
                writeln!(out, "cbar[{x}][{y}]={}", self.cbar.get(i, j)).unwrap();
            }
        }
        for (i, x) in self.orbit_ids.iter().enumerate() {
            for (j, y) in self.orbit_ids.iter().enumerate() {
                writeln!(out, "G[{x}][{y}]={}", self.growth_cell(i, j)).unwrap();
            }
        }
        writeln!(out, "identity={}", verdict(self.identity_holds)).unwrap();
        for f in &self.failures {
            writeln!(out, "failure[{}][{}]={}:{}", f.row, f.col, degree_str(f.degree), f.found).unwrap();
        }
        for c in &self.corollaries {
            writeln!(out, "{}={}", c.name, verdict(c.holds)).unwrap();
        }
        out
    }
}
