//! Tables of radii and the curve data behind the radius equations.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::radii::{bernardi_equation, bernardi_radius, cesaro_equation, cesaro_radius, closed_form_radius, g_cubic, ClosedForm};

/// Stand-in for the row endpoint `gamma = 1`, which lies outside `[0, 1)`.
pub const GAMMA_ONE: f64 = 1.0 - 1e-9;

const CURVE_LO: f64 = 1e-4;
const CURVE_HI: f64 = 1.0 - 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColumnParam {
    P { p: f64 },
    Alpha { alpha: f64 },
    MBeta { m: u32, beta: f64 },
}

impl ColumnParam {
    fn label(&self, id: u8) -> String {
        match *self {
            ColumnParam::P { p } => format!("R{id}({p},gamma)"),
            ColumnParam::Alpha { alpha } => format!("R(gamma,{alpha})"),
            ColumnParam::MBeta { m, beta } => format!("R({m},{beta},gamma)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub left: f64,
    pub right: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableSpec {
    pub id: u8,
    pub caption: String,
    /// Interval endpoints as listed; the final `1` is evaluated at [`GAMMA_ONE`].
    pub row_gammas: Vec<f64>,
    pub column_params: Vec<ColumnParam>,
    pub column_labels: Vec<String>,
    /// `cells[row][col]`.
    pub cells: Vec<Vec<Cell>>,
}

impl TableSpec {
    pub fn rows(&self) -> usize {
        self.row_gammas.len().saturating_sub(1)
    }

    pub fn row_label(&self, row: usize) -> String {
        format!("[{},{})", self.row_gammas[row], self.row_gammas[row + 1])
    }
}

fn step_rows() -> Vec<f64> {
    vec![0.0, 0.2, 0.4, 0.6, 0.8, 1.0]
}

fn table_layout(id: u8) -> Result<(Vec<f64>, Vec<ColumnParam>)> {
    let ps = |v: [f64; 4]| v.iter().map(|&p| ColumnParam::P { p }).collect::<Vec<_>>();
    Ok(match id {
        1 => (step_rows(), ps([1.0, 1.5, 1.7, 2.0])),
        2 => (step_rows(), ps([1.0, 1.4, 1.8, 2.0])),
        3 => (step_rows(), ps([1.0, 1.5, 1.8, 2.0])),
        4 => (step_rows(), ps([1.0, 1.3, 1.6, 2.0])),
        5 => (
            vec![0.0, 0.3, 0.5, 0.7, 0.9, 1.0],
            [0.0, 10.0, 20.0, 30.0].iter().map(|&alpha| ColumnParam::Alpha { alpha }).collect(),
        ),
        6 => (
            step_rows(),
            [(0, 1.0), (0, 2.0), (1, 2.0), (4, 0.0)].iter().map(|&(m, beta)| ColumnParam::MBeta { m, beta }).collect(),
        ),
        _ => return Err(domain(format!("table id {id} outside 1..=6"))),
    })
}

fn evaluation_gamma(gamma: f64) -> f64 {
    if gamma >= 1.0 {
        GAMMA_ONE
    } else {
        gamma
    }
}

/// The radius a table cell reports at a single `gamma`.
pub fn table_value(id: u8, column: ColumnParam, gamma: f64) -> Result<f64> {
    let gamma = evaluation_gamma(gamma);
    match (id, column) {
        (1..=4, ColumnParam::P { p }) => closed_form_radius(ClosedForm::ALL[id as usize - 1], p, gamma),
        (5, ColumnParam::Alpha { alpha }) => Ok(cesaro_radius(gamma, alpha)?.root),
        (6, ColumnParam::MBeta { m, beta }) => Ok(bernardi_radius(m, beta, gamma)?.root),
        _ => Err(Error::InvalidInput(format!("column {column:?} does not belong to table {id}"))),
    }
}

pub fn reproduce_table(id: u8) -> Result<TableSpec> {
    let (row_gammas, column_params) = table_layout(id)?;
    // each distinct gamma is solved once; neighbouring rows share endpoints
    let values: Vec<Vec<f64>> = row_gammas
        .par_iter()
        .map(|&g| column_params.iter().map(|&c| table_value(id, c, g)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let cells = (0..row_gammas.len() - 1)
        .map(|row| {
            (0..column_params.len())
                .map(|col| Cell { left: values[row][col], right: values[row + 1][col] })
                .collect()
        })
        .collect();
    let column_labels: Vec<String> = column_params.iter().map(|c| c.label(id)).collect();
    let caption = format!("Values of {} for gamma in [0,1)", column_labels.join(", "));
    Ok(TableSpec { id, caption, row_gammas, column_params, column_labels, cells })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum CurveParams {
    /// `G_{p,gamma}(r) = p(1+gamma)(1-r)^3 - 2r(1+r)`.
    G { p: f64, gamma: f64 },
    /// `C_{gamma,alpha}(r)`.
    C { gamma: f64, alpha: f64 },
    /// `B_{m,beta,gamma}(r) = r^m L_{m,beta,gamma}(r)`.
    B { m: u32, beta: f64, gamma: f64 },
}

impl CurveParams {
    pub fn gamma(&self) -> f64 {
        match *self {
            CurveParams::G { gamma, .. } | CurveParams::C { gamma, .. } | CurveParams::B { gamma, .. } => gamma,
        }
    }

    fn with_gamma(self, gamma: f64) -> Self {
        match self {
            CurveParams::G { p, .. } => CurveParams::G { p, gamma },
            CurveParams::C { alpha, .. } => CurveParams::C { gamma, alpha },
            CurveParams::B { m, beta, .. } => CurveParams::B { m, beta, gamma },
        }
    }

    fn validate(&self) -> Result<()> {
        let g = self.gamma();
        if !(0.0..=1.0).contains(&g) {
            return Err(domain(format!("gamma = {g} outside [0, 1]")));
        }
        match *self {
            CurveParams::G { p, .. } if !(1.0..=2.0).contains(&p) => Err(domain(format!("p = {p} outside [1, 2]"))),
            CurveParams::C { alpha, .. } if !(alpha.is_finite() && alpha > -1.0) => {
                Err(domain(format!("alpha = {alpha} must exceed -1")))
            }
            CurveParams::B { m, beta, .. } if !(beta.is_finite() && m as f64 + beta > 0.0) => {
                Err(domain(format!("m + beta must be positive, got m = {m}, beta = {beta}")))
            }
            _ => Ok(()),
        }
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        match self.with_gamma(evaluation_gamma(self.gamma())) {
            CurveParams::G { p, gamma } => Ok(g_cubic(p, gamma, r)),
            CurveParams::C { gamma, alpha } => cesaro_equation(gamma, alpha, r),
            CurveParams::B { m, beta, gamma } => Ok(r.powi(m as i32) * bernardi_equation(m, beta, gamma, r)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub params: CurveParams,
    pub points: Vec<(f64, f64)>,
}

pub fn sample_curve(params: CurveParams, n_samples: usize) -> Result<CurveSample> {
    params.validate()?;
    if n_samples < 2 {
        return Err(domain(format!("n_samples = {n_samples} must be at least 2")));
    }
    let step = (CURVE_HI - CURVE_LO) / (n_samples - 1) as f64;
    let points = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let r = if i + 1 == n_samples { CURVE_HI } else { CURVE_LO + i as f64 * step };
            params.eval(r).map(|v| (r, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveSample { params, points })
}

/// Abscissae where consecutive samples change sign, by linear interpolation.
pub fn sign_changes(points: &[(f64, f64)]) -> Vec<f64> {
    let mut out = Vec::new();
    for w in points.windows(2) {
        let ((r0, v0), (r1, v1)) = (w[0], w[1]);
        if v0 == 0.0 {
            out.push(r0);
        } else if v0.signum() != v1.signum() && v1 != 0.0 {
            out.push(r0 - v0 * (r1 - r0) / (v1 - v0));
        }
    }
    if let Some(&(r, v)) = points.last() {
        if v == 0.0 {
            out.push(r);
        }
    }
    out
}

/// Curve parameter sets of the six figures: one entry per panel, one curve per gamma.
pub fn figure_curves(figure: u8) -> Result<Vec<CurveParams>> {
    let gs = |list: &[f64], f: &dyn Fn(f64) -> CurveParams| list.iter().map(|&g| f(g)).collect::<Vec<_>>();
    let g_gammas = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0];
    let c_gammas = [0.0, 0.3, 0.5, 0.7, 0.9, 1.0];
    let b_gammas = [0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 1.0];
    let mut out = Vec::new();
    match figure {
        1 | 2 => {
            let ps: [f64; 2] = if figure == 1 { [1.0, 1.3] } else { [1.6, 2.0] };
            for p in ps {
                out.extend(gs(&g_gammas, &|gamma| CurveParams::G { p, gamma }));
            }
        }
        3 | 4 => {
            let alphas: [f64; 2] = if figure == 3 { [0.0, 10.0] } else { [20.0, 30.0] };
            for alpha in alphas {
                out.extend(gs(&c_gammas, &|gamma| CurveParams::C { gamma, alpha }));
            }
        }
        5 | 6 => {
            let mbs: [(u32, f64); 2] = if figure == 5 { [(0, 1.0), (0, 2.0)] } else { [(1, 2.0), (4, 0.0)] };
            for (m, beta) in mbs {
                out.extend(gs(&b_gammas, &|gamma| CurveParams::B { m, beta, gamma }));
            }
        }
        _ => return Err(domain(format!("figure {figure} outside 1..=6"))),
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

pub enum Item<'a> {
    Table(&'a TableSpec),
    Curve(&'a CurveSample),
}

/// Decimal rendering with 10 significant digits and no trailing zeros.
pub fn format_sig10(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.9e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

pub fn emit(item: Item<'_>, format: Format) -> String {
    match (item, format) {
        (Item::Curve(c), Format::Json) => serde_json::to_string_pretty(c).expect("curve serializes") + "\n",
        (Item::Table(t), Format::Json) => serde_json::to_string_pretty(t).expect("table serializes") + "\n",
        (Item::Curve(c), Format::Csv) => {
            let mut s = String::from("r,value\n");
            for &(r, v) in &c.points {
                s.push_str(&format!("{},{}\n", format_sig10(r), format_sig10(v)));
            }
            s
        }
        (Item::Curve(c), Format::Markdown) => {
            let mut s = String::from("| r | value |\n|---|---|\n");
            for &(r, v) in &c.points {
                s.push_str(&format!("| {r:.4} | {v:.4} |\n"));
            }
            s
        }
        (Item::Table(t), Format::Csv) => {
            let mut s = String::from("gamma_lo,gamma_hi");
            for label in &t.column_labels {
                s.push_str(&format!(",{label}:left,{label}:right"));
            }
            s.push('\n');
            for (row, cells) in t.cells.iter().enumerate() {
                s.push_str(&format!("{},{}", format_sig10(t.row_gammas[row]), format_sig10(t.row_gammas[row + 1])));
                for c in cells {
                    s.push_str(&format!(",{},{}", format_sig10(c.left), format_sig10(c.right)));
                }
                s.push('\n');
            }
            s
        }
        (Item::Table(t), Format::Markdown) => {
            let mut s = format!("| gamma | {} |\n", t.column_labels.join(" | "));
            s.push_str(&format!("|---{}|\n", "|---".repeat(t.column_labels.len())));
            for (row, cells) in t.cells.iter().enumerate() {
                s.push_str(&format!("| {} |", t.row_label(row)));
                for c in cells {
                    s.push_str(&format!(" {:.4} ↗ {:.4} |", c.left, c.right));
                }
                s.push('\n');
            }
            s
        }
    }
}

/// Parses CSV text produced by [`emit`] into its header and numeric rows.
pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty CSV".into()))?
        .split(',')
        .map(str::to_owned)
        .collect::<Vec<_>>();
    let rows = lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split(',')
                .map(|f| f.parse::<f64>().map_err(|e| Error::InvalidInput(format!("CSV field {f:?}: {e}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((header, rows))
}
