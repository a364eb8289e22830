//! Finite (pre)modular category data.
//!
//! A category is presented numerically: simple objects are indexed `0..rank`
//! with `0` the unit, duals form an explicit involution, and the fusion tensor
//! `N[i][j][k] = N_ij^k` is stored densely. The stored s-matrix is the
//! unnormalized one, so `s[0][j] = d_j`.

mod builtin;

use std::collections::BTreeSet;
use std::path::Path;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

pub use builtin::{builtin_names, load_builtin, BuiltinInfo};
pub(crate) use builtin::su2_admissible;

use crate::report::{CheckResult, Report};
use crate::{c64, Error, Label, Result, C64};

/// JSON document for a user-supplied category.
///
/// Complex scalars are `[re, im]` pairs. When `s` is absent it is synthesized
/// from the ribbon identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawCategory {
    pub name: String,
    pub labels: Vec<String>,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u32>>>,
    pub d: Vec<[f64; 2]>,
    pub theta: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<[f64; 2]>>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CategoryData {
    name: String,
    labels: Vec<String>,
    dual: Vec<Label>,
    fusion: Vec<u32>,
    dims: Vec<C64>,
    twists: Vec<C64>,
    s: DMatrix<C64>,
    global_dim: C64,
}

fn to_c(p: [f64; 2]) -> C64 {
    c64(p[0], p[1])
}

fn from_c(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

/// `s_ij = θ_i⁻¹ θ_j⁻¹ Σ_k N_{i*j}^k d_k θ_k`.
fn ribbon_s(rank: usize, dual: &[Label], fusion: &[u32], d: &[C64], theta: &[C64]) -> DMatrix<C64> {
    let n = |i: usize, j: usize, k: usize| fusion[(i * rank + j) * rank + k];
    DMatrix::from_fn(rank, rank, |i, j| {
        let sum: C64 = (0..rank)
            .map(|k| d[k] * theta[k] * n(dual[i], j, k) as f64)
            .sum();
        sum / (theta[i] * theta[j])
    })
}

impl CategoryData {
    /// Builds category data, checking only shapes. Numeric consistency is the
    /// job of [`CategoryData::validate`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        dual: Vec<Label>,
        fusion: Vec<u32>,
        dims: Vec<C64>,
        twists: Vec<C64>,
        s: Option<DMatrix<C64>>,
    ) -> Result<Self> {
        let rank = labels.len();
        if rank == 0 {
            return Err(Error::Shape("no labels".into()));
        }
        if dual.len() != rank {
            return Err(Error::Shape(format!("dual has length {}, expected {rank}", dual.len())));
        }
        if let Some(&bad) = dual.iter().find(|&&x| x >= rank) {
            return Err(Error::Shape(format!("dual entry {bad} out of range")));
        }
        if fusion.len() != rank * rank * rank {
            return Err(Error::Shape(format!(
                "N has {} entries, expected {}",
                fusion.len(),
                rank * rank * rank
            )));
        }
        if dims.len() != rank {
            return Err(Error::Shape(format!("d has length {}, expected {rank}", dims.len())));
        }
        if twists.len() != rank {
            return Err(Error::Shape(format!("theta has length {}, expected {rank}", twists.len())));
        }
        if twists.iter().any(|t| t.norm() == 0.0) {
            return Err(Error::Shape("twists must be non-zero".into()));
        }
        let s = match s {
            Some(s) => {
                if s.nrows() != rank || s.ncols() != rank {
                    return Err(Error::Shape(format!(
                        "s is {}x{}, expected {rank}x{rank}",
                        s.nrows(),
                        s.ncols()
                    )));
                }
                s
            }
            None => ribbon_s(rank, &dual, &fusion, &dims, &twists),
        };
        let global_dim = dims.iter().map(|d| d * d).sum();
        Ok(CategoryData {
            name: name.into(),
            labels,
            dual,
            fusion,
            dims,
            twists,
            s,
            global_dim,
        })
    }

    pub fn from_raw(raw: RawCategory) -> Result<Self> {
        let rank = raw.labels.len();
        if raw.n.len() != rank
            || raw.n.iter().any(|m| m.len() != rank || m.iter().any(|r| r.len() != rank))
        {
            return Err(Error::Shape(format!("N must be {rank}x{rank}x{rank}")));
        }
        let fusion: Vec<u32> = raw.n.iter().flatten().flatten().copied().collect();
        let s = match raw.s {
            Some(rows) => {
                if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
                    return Err(Error::Shape(format!("s must be {rank}x{rank}")));
                }
                Some(DMatrix::from_fn(rank, rank, |i, j| to_c(rows[i][j])))
            }
            None => None,
        };
        CategoryData::new(
            raw.name,
            raw.labels,
            raw.dual,
            fusion,
            raw.d.into_iter().map(to_c).collect(),
            raw.theta.into_iter().map(to_c).collect(),
            s,
        )
    }

    pub fn to_raw(&self) -> RawCategory {
        let r = self.rank();
        RawCategory {
            name: self.name.clone(),
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            n: (0..r)
                .map(|i| (0..r).map(|j| (0..r).map(|k| self.n(i, j, k)).collect()).collect())
                .collect(),
            d: self.dims.iter().copied().map(from_c).collect(),
            theta: self.twists.iter().copied().map(from_c).collect(),
            s: Some(
                (0..r)
                    .map(|i| (0..r).map(|j| from_c(self.s[(i, j)])).collect())
                    .collect(),
            ),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawCategory = serde_json::from_str(text)?;
        Self::from_raw(raw)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("category serializes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_name(&self, i: Label) -> &str {
        &self.labels[i]
    }

    /// Resolves a label by exact name, by index, or by an ASCII spelling of
    /// the usual Greek names (`tau`, `sigma`, `psi`).
    pub fn label_index(&self, name: &str) -> Option<Label> {
        let name = name.trim();
        if let Some(i) = self.labels.iter().position(|l| l == name) {
            return Some(i);
        }
        if let Ok(i) = name.parse::<usize>() {
            if i < self.rank() {
                return Some(i);
            }
        }
        let spelled = name
            .replace("tau", "τ")
            .replace("sigma", "σ")
            .replace("psi", "ψ")
            .replace("omega", "ω")
            .replace('w', "ω")
            .replace('²', "^2")
            .replace('³', "^3");
        self.labels.iter().position(|l| *l == spelled)
    }

    pub fn dual(&self, i: Label) -> Label {
        self.dual[i]
    }

    pub fn duals(&self) -> &[Label] {
        &self.dual
    }

    /// Fusion multiplicity `N_ij^k`.
    pub fn n(&self, i: Label, j: Label, k: Label) -> u32 {
        let r = self.rank();
        self.fusion[(i * r + j) * r + k]
    }

    /// Labels `k` with `N_ij^k > 0`.
    pub fn channels(&self, i: Label, j: Label) -> impl Iterator<Item = Label> + '_ {
        (0..self.rank()).filter(move |&k| self.n(i, j, k) > 0)
    }

    pub fn d(&self, i: Label) -> C64 {
        self.dims[i]
    }

    pub fn dims(&self) -> &[C64] {
        &self.dims
    }

    pub fn theta(&self, i: Label) -> C64 {
        self.twists[i]
    }

    pub fn s(&self, i: Label, j: Label) -> C64 {
        self.s[(i, j)]
    }

    /// `s̄_ij = s_{i*j}`.
    pub fn sbar(&self, i: Label, j: Label) -> C64 {
        self.s[(self.dual[i], j)]
    }

    pub fn s_matrix(&self) -> &DMatrix<C64> {
        &self.s
    }

    pub fn sbar_matrix(&self) -> DMatrix<C64> {
        let r = self.rank();
        DMatrix::from_fn(r, r, |i, j| self.sbar(i, j))
    }

    /// `𝔇 = Σ_i d_i²`.
    pub fn global_dim(&self) -> C64 {
        self.global_dim
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.fusion.iter().all(|&v| v <= 1)
    }

    /// Transparent simple objects: `s_ij = d_i d_j` for every `j`.
    pub fn transparent_objects(&self, tol: f64) -> Vec<Label> {
        let r = self.rank();
        (0..r)
            .filter(|&i| (0..r).all(|j| (self.s(i, j) - self.d(i) * self.d(j)).norm() <= tol))
            .collect()
    }

    /// Modular means the s-matrix is invertible.
    pub fn is_modular(&self, tol: f64) -> bool {
        self.s.clone().determinant().norm() > tol
    }

    /// Runs every structural invariant and reports residuals.
    pub fn validate(&self, tol: f64) -> Report {
        let r = self.rank();
        let one = |b: bool| if b { 1.0 } else { 0.0 };
        let ints = |a: u32, b: u32| (a as f64 - b as f64).abs();
        let mut rep = Report::new();

        rep.push(CheckResult::from_residuals(
            "unit normalization",
            tol,
            [
                (vec![0], (self.d(0) - 1.0).norm()),
                (vec![0], (self.theta(0) - 1.0).norm()),
                (vec![0], one(self.dual(0) != 0)),
            ],
        ));
        rep.push(CheckResult::from_residuals(
            "dual involution",
            tol,
            (0..r).map(|i| (vec![i], one(self.dual(self.dual(i)) != i))),
        ));
        rep.push(CheckResult::from_residuals(
            "dual dimensions and twists",
            tol,
            (0..r).map(|i| {
                let j = self.dual(i);
                let res = (self.d(j) - self.d(i)).norm().max((self.theta(j) - self.theta(i)).norm());
                (vec![i], res)
            }),
        ));
        rep.push(CheckResult::from_residuals(
            "unit fusion",
            tol,
            (0..r).flat_map(|j| {
                (0..r).map(move |k| {
                    let want = u32::from(j == k);
                    (vec![j, k], ints(self.n(0, j, k), want).max(ints(self.n(j, 0, k), want)))
                })
            }),
        ));
        rep.push(CheckResult::from_residuals(
            "fusion duality",
            tol,
            triples(r).map(|(i, j, k)| {
                let other = self.n(self.dual(j), self.dual(i), self.dual(k));
                (vec![i, j, k], ints(self.n(i, j, k), other))
            }),
        ));
        rep.push(CheckResult::from_residuals(
            "unit channel",
            tol,
            (0..r).flat_map(|i| {
                (0..r).map(move |j| {
                    let want = u32::from(j == self.dual(i));
                    (vec![i, j], ints(self.n(i, j, 0), want))
                })
            }),
        ));
        rep.push(CheckResult::from_residuals(
            "associativity",
            tol,
            triples(r).flat_map(|(i, j, k)| {
                (0..r).map(move |l| {
                    let left: u64 = (0..r).map(|m| (self.n(i, j, m) * self.n(m, k, l)) as u64).sum();
                    let right: u64 = (0..r).map(|m| (self.n(j, k, m) * self.n(i, m, l)) as u64).sum();
                    (vec![i, j, k, l], (left as f64 - right as f64).abs())
                })
            }),
        ));
        rep.push(CheckResult::from_residuals(
            "dimension equation",
            tol,
            (0..r).flat_map(|i| {
                (0..r).map(move |j| {
                    let rhs: C64 = (0..r).map(|k| self.d(k) * self.n(i, j, k) as f64).sum();
                    (vec![i, j], (self.d(i) * self.d(j) - rhs).norm())
                })
            }),
        ));
        rep.push(CheckResult::from_residuals(
            "global dimension",
            tol,
            [(vec![], if self.global_dim.norm() > tol { 0.0 } else { 1.0 })],
        ));
        rep.push(CheckResult::from_residuals(
            "s symmetric",
            tol,
            (0..r).flat_map(|i| (0..r).map(move |j| (vec![i, j], (self.s(i, j) - self.s(j, i)).norm()))),
        ));
        rep.push(CheckResult::from_residuals(
            "s unit row",
            tol,
            (0..r).map(|j| (vec![j], (self.s(0, j) - self.d(j)).norm())),
        ));
        let synth = ribbon_s(r, &self.dual, &self.fusion, &self.dims, &self.twists);
        rep.push(CheckResult::from_residuals(
            "ribbon consistency",
            tol,
            (0..r).flat_map(|i| {
                let synth = &synth;
                (0..r).map(move |j| (vec![i, j], (self.s(i, j) - synth[(i, j)]).norm()))
            }),
        ));
        rep
    }

    /// Deligne product: labels are pairs, all data multiply componentwise.
    pub fn product(a: &CategoryData, b: &CategoryData) -> CategoryData {
        let (ra, rb) = (a.rank(), b.rank());
        let r = ra * rb;
        let split = |x: usize| (x / rb, x % rb);
        let labels = (0..r)
            .map(|x| {
                let (i, j) = split(x);
                format!("({},{})", a.label_name(i), b.label_name(j))
            })
            .collect();
        let dual = (0..r)
            .map(|x| {
                let (i, j) = split(x);
                a.dual(i) * rb + b.dual(j)
            })
            .collect();
        let mut fusion = vec![0; r * r * r];
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let ((i, j), (k, l), (m, n)) = (split(x), split(y), split(z));
                    fusion[(x * r + y) * r + z] = a.n(i, k, m) * b.n(j, l, n);
                }
            }
        }
        let dims = (0..r).map(|x| a.d(x / rb) * b.d(x % rb)).collect();
        let twists = (0..r).map(|x| a.theta(x / rb) * b.theta(x % rb)).collect();
        let s = DMatrix::from_fn(r, r, |x, y| {
            let ((i, j), (k, l)) = (split(x), split(y));
            a.s(i, k) * b.s(j, l)
        });
        CategoryData::new(
            format!("{}*{}", a.name(), b.name()),
            labels,
            dual,
            fusion,
            dims,
            twists,
            Some(s),
        )
        .expect("product of well-shaped data is well-shaped")
    }
}

fn triples(r: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..r).flat_map(move |i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k))))
}

/// Labels appearing with non-zero coefficient, as a set.
pub fn label_set(labels: &[Label]) -> BTreeSet<Label> {
    labels.iter().copied().collect()
}
