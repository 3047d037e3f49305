//! Parameter grids for the figure datasets.
//!
//! Each preset fixes the model parameters of one figure. Axis ranges and any
//! curve values not pinned down otherwise are estimates.
//! Multi-curve figures produce one sweep per curve.

use spinchain_core::analysis::{critical_b_nonuniform, critical_b_uniform, critical_dm_strength};
use spinchain_core::{
    couplings_from_mean_anisotropy, Axis, MeanAnisotropy, ModelParams, Result, SweepAxis,
    SweepParam, SweepSpec,
};

pub const FIGURE_IDS: [&str; 23] = [
    "fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig5", "fig6a",
    "fig6b", "fig6c", "fig6d", "fig7A", "fig7a", "fig7B", "fig7b", "fig7C", "fig7c", "fig8A",
    "fig8a", "fig8B", "fig8b",
];

type Maker = Box<dyn Fn(f64) -> ModelParams>;

pub fn is_figure_id(id: &str) -> bool {
    FIGURE_IDS.contains(&id)
}

/// Closed-form critical value reported alongside a figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalQuery {
    DmStrength,
    UniformField,
    NonuniformField,
}

impl CriticalQuery {
    pub fn name(self) -> &'static str {
        match self {
            Self::DmStrength => "D_xc",
            Self::UniformField => "B_xc",
            Self::NonuniformField => "b_xc",
        }
    }

    pub fn evaluate(self, p: &ModelParams) -> Result<Option<f64>> {
        match self {
            Self::DmStrength => critical_dm_strength(p),
            Self::UniformField => critical_b_uniform(p),
            Self::NonuniformField => critical_b_nonuniform(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    /// Empty for single-curve figures; otherwise used as a file-name suffix.
    pub label: String,
    pub spec: SweepSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub id: String,
    pub title: &'static str,
    pub curves: Vec<Curve>,
    pub criticals: Vec<CriticalQuery>,
}

/// Grid sizes: points along one-dimensional sweeps and per axis of surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Density {
    pub line: usize,
    pub surface: usize,
}

impl Default for Density {
    fn default() -> Self {
        Self { line: 501, surface: 101 }
    }
}

fn lin(param: SweepParam, min: f64, max: f64, n: usize) -> SweepAxis {
    SweepAxis::linspace(param, min, max, n).expect("preset axis")
}

fn spec(base: ModelParams, t: f64, a1: SweepAxis, a2: Option<SweepAxis>) -> SweepSpec {
    SweepSpec::new(base, t, a1, a2).expect("preset spec")
}

fn curve(label: impl Into<String>, spec: SweepSpec) -> Curve {
    Curve {
        label: label.into(),
        spec,
    }
}

/// x-axis parameters from mean YZ coupling `j` and anisotropy `delta`.
fn x_mean(j_x: f64, j: f64, delta: f64, d: f64, b_uniform: f64, b: f64) -> ModelParams {
    let (j_y, j_z) = couplings_from_mean_anisotropy(MeanAnisotropy::new(j, delta));
    ModelParams::x(j_x, j_y, j_z, d, b_uniform, b)
}

fn both_axes(base: ModelParams) -> [(&'static str, ModelParams); 2] {
    [("z", base.with_axis(Axis::Z)), ("x", base.with_axis(Axis::X))]
}

fn label(prefix: &str, v: f64) -> String {
    format!("{prefix}{v}")
}

/// Builds the preset for `id`, or `None` for an unknown id.
pub fn figure(id: &str, density: Density) -> Option<Figure> {
    if !is_figure_id(id) {
        return None;
    }
    let n = density.line;
    let m = density.surface;
    let t_axis = |max: f64, k: usize| lin(SweepParam::T, 0.01, max, k);
    let j1 = ModelParams::z(1.0, 0.5, 0.2, 0.0, 0.0, 0.0);
    let j3 = ModelParams::z(1.0, 0.8, 0.2, 0.0, 0.0, 0.0);
    let j4 = ModelParams::z(0.2, 0.4, 1.0, 0.0, 0.0, 0.0);
    let j7 = |d: f64, bu: f64, b: f64| ModelParams::x(0.8, 0.5, 0.2, d, bu, b);

    let mut criticals = Vec::new();
    let (title, curves) = match id {
        "fig1a" | "fig1b" => {
            let axis = if id == "fig1a" { Axis::Z } else { Axis::X };
            let s = spec(j1.with_axis(axis), 1.0, lin(SweepParam::D, 0.0, 6.0, m), Some(t_axis(8.0, m)));
            ("concurrence versus DM strength and temperature, no field", vec![curve("", s)])
        }
        "fig2a" => (
            "concurrence versus DM strength at T = 3, z and x axis",
            both_axes(j1)
                .into_iter()
                .map(|(l, p)| curve(l, spec(p, 3.0, lin(SweepParam::D, 0.0, 6.0, n), None)))
                .collect(),
        ),
        "fig2b" => {
            let mut base = j1;
            base.fields.d = 3.0;
            (
                "concurrence versus temperature at D = 3, z and x axis",
                both_axes(base)
                    .into_iter()
                    .map(|(l, p)| curve(l, spec(p, 1.0, t_axis(10.0, n), None)))
                    .collect(),
            )
        }
        "fig3a" => (
            "concurrence versus uniform field at T = 0.1, z and x axis",
            both_axes(j3)
                .into_iter()
                .map(|(l, p)| curve(l, spec(p, 0.1, lin(SweepParam::B, 0.0, 4.0, n), None)))
                .collect(),
        ),
        "fig3b" => {
            let mut base = j3;
            base.fields.b_uniform = 1.0;
            (
                "concurrence versus temperature at B = 1, z and x axis",
                both_axes(base)
                    .into_iter()
                    .map(|(l, p)| curve(l, spec(p, 1.0, t_axis(5.0, n), None)))
                    .collect(),
            )
        }
        "fig4a" => (
            "concurrence versus nonuniform field at T = 0.2, z and x axis",
            both_axes(j4)
                .into_iter()
                .map(|(l, p)| curve(l, spec(p, 0.2, lin(SweepParam::Bn, 0.0, 4.0, n), None)))
                .collect(),
        ),
        "fig4b" => {
            let mut base = j4;
            base.fields.b_nonuniform = 1.5;
            (
                "concurrence versus temperature at b = 1.5, z and x axis",
                both_axes(base)
                    .into_iter()
                    .map(|(l, p)| curve(l, spec(p, 1.0, t_axis(5.0, n), None)))
                    .collect(),
            )
        }
        "fig5" => {
            criticals.push(CriticalQuery::NonuniformField);
            (
                "ground-state concurrence versus nonuniform field for several D",
                [0.0, 1.0, 1.5]
                    .into_iter()
                    .map(|d| {
                        let p = x_mean(-1.0, 0.5, 0.8, d, 1.0, 0.0);
                        curve(label("D", d), spec(p, 0.0, lin(SweepParam::Bn, 0.0, 3.0, n), None))
                    })
                    .collect(),
            )
        }
        "fig6a" | "fig6b" | "fig6c" | "fig6d" => {
            criticals.push(CriticalQuery::DmStrength);
            let (prefix, values, make): (&str, [f64; 3], Maker) = match id {
                "fig6a" => ("b", [0.0, 0.8, 1.5], Box::new(|v| x_mean(-1.0, 0.5, 0.8, 0.0, 1.0, v))),
                "fig6b" => ("Delta", [0.2, 0.8, 1.5], Box::new(|v| x_mean(-1.0, 0.5, v, 0.0, 0.8, 1.0))),
                "fig6c" => ("B", [0.5, 1.0, 1.5], Box::new(|v| x_mean(-1.0, 0.5, 0.8, 0.0, v, 1.0))),
                _ => ("J", [0.2, 0.8, 1.5], Box::new(|v| x_mean(-1.0, v, 0.5, 0.0, 0.8, 1.0))),
            };
            (
                "ground-state concurrence versus DM strength",
                values
                    .into_iter()
                    .map(|v| curve(label(prefix, v), spec(make(v), 0.0, lin(SweepParam::D, 0.0, 4.0, n), None)))
                    .collect(),
            )
        }
        "fig7A" => {
            criticals.push(CriticalQuery::DmStrength);
            let s = spec(j7(0.0, 3.0, 1.5), 1.0, lin(SweepParam::D, 0.0, 4.0, m), Some(t_axis(6.0, m)));
            ("concurrence versus DM strength and temperature", vec![curve("", s)])
        }
        "fig7a" => {
            criticals.push(CriticalQuery::DmStrength);
            let dc = critical_dm_strength(&j7(0.0, 3.0, 1.5)).ok().flatten().expect("D_xc exists");
            (
                "concurrence versus temperature for several D",
                [("D0", 0.0), ("D1", 1.0), ("Dxc", dc), ("D2", 2.0)]
                    .into_iter()
                    .map(|(l, d)| curve(l, spec(j7(d, 3.0, 1.5), 1.0, t_axis(6.0, n), None)))
                    .collect(),
            )
        }
        "fig7B" => {
            criticals.push(CriticalQuery::UniformField);
            let s = spec(j7(1.0, 0.0, 1.5), 1.0, lin(SweepParam::B, 0.0, 6.0, m), Some(t_axis(6.0, m)));
            ("concurrence versus uniform field and temperature", vec![curve("", s)])
        }
        "fig7b" => {
            criticals.push(CriticalQuery::UniformField);
            let bc = critical_b_uniform(&j7(1.0, 0.0, 1.5)).ok().flatten().expect("B_xc exists");
            (
                "concurrence versus temperature for several B",
                [("B5", 5.0), ("B3", 3.0), ("Bxc", bc), ("B1", 1.0)]
                    .into_iter()
                    .map(|(l, b)| curve(l, spec(j7(1.0, b, 1.5), 1.0, t_axis(6.0, n), None)))
                    .collect(),
            )
        }
        "fig7C" => {
            criticals.push(CriticalQuery::NonuniformField);
            let s = spec(j7(1.6, 3.0, 0.0), 1.0, lin(SweepParam::Bn, 0.0, 3.0, m), Some(t_axis(6.0, m)));
            ("concurrence versus nonuniform field and temperature", vec![curve("", s)])
        }
        "fig7c" => {
            criticals.push(CriticalQuery::NonuniformField);
            let bc = critical_b_nonuniform(&j7(1.6, 3.0, 0.0)).ok().flatten().expect("b_xc exists");
            (
                "concurrence versus temperature for several b",
                [("b0", 0.0), ("b1", 1.0), ("bxc", bc), ("b2", 2.0)]
                    .into_iter()
                    .map(|(l, b)| curve(l, spec(j7(1.6, 3.0, b), 1.0, t_axis(6.0, n), None)))
                    .collect(),
            )
        }
        "fig8A" => {
            let s = spec(
                j7(0.0, 0.0, 1.5),
                0.5,
                lin(SweepParam::B, 0.0, 6.0, m),
                Some(lin(SweepParam::D, 0.0, 6.0, m)),
            );
            ("concurrence versus uniform field and DM strength at T = 0.5", vec![curve("", s)])
        }
        "fig8a" => {
            criticals.push(CriticalQuery::UniformField);
            (
                "concurrence versus uniform field for several D at T = 0.5",
                [0.0, 2.0, 5.0]
                    .into_iter()
                    .map(|d| curve(label("D", d), spec(j7(d, 0.0, 1.5), 0.5, lin(SweepParam::B, 0.0, 6.0, n), None)))
                    .collect(),
            )
        }
        "fig8B" => {
            let s = spec(
                j7(0.0, 3.0, 0.0),
                0.5,
                lin(SweepParam::Bn, 0.0, 4.0, m),
                Some(lin(SweepParam::D, 0.0, 4.0, m)),
            );
            ("concurrence versus nonuniform field and DM strength at T = 0.5", vec![curve("", s)])
        }
        "fig8b" => {
            criticals.push(CriticalQuery::NonuniformField);
            (
                "concurrence versus nonuniform field for several D at T = 0.5",
                [0.0, 1.0, 3.0]
                    .into_iter()
                    .map(|d| curve(label("D", d), spec(j7(d, 3.0, 0.0), 0.5, lin(SweepParam::Bn, 0.0, 4.0, n), None)))
                    .collect(),
            )
        }
        _ => unreachable!("id checked above"),
    };
    Some(Figure {
        id: id.to_string(),
        title,
        curves,
        criticals,
    })
}
