//! F- and R-symbols for multiplicity-free categories.
//!
//! Conventions (splitting spaces, left-combed trees):
//!
//! * `|(ab)_e c; d⟩ = Σ_f F^{abc}_d[e,f] |a(bc)_f; d⟩`
//! * `c_{a,b} ψ^{ab}_c = R^{ab}_c ψ^{ba}_c`
//!
//! Entries that are admissible but absent from a table default to `1`, which
//! is the unit gauge used by every builtin.

use std::collections::HashMap;
use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::category::CategoryData;
use crate::report::{CheckResult, Report};
use crate::source::{parse_builtin_spec, split_product};
use crate::{c64, Error, Label, Result, C64};

#[derive(Clone, Debug)]
struct FBlock {
    es: Vec<Label>,
    fs: Vec<Label>,
    inv: Option<DMatrix<C64>>,
}

#[derive(Clone, Debug)]
pub struct FrData {
    rank: usize,
    fusion: Vec<u32>,
    f: HashMap<[Label; 6], C64>,
    r: HashMap<[Label; 3], C64>,
    blocks: HashMap<[Label; 4], FBlock>,
}

#[derive(Serialize, Deserialize)]
struct FEntry {
    i: Label,
    j: Label,
    k: Label,
    l: Label,
    m: Label,
    n: Label,
    v: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct REntry {
    i: Label,
    j: Label,
    k: Label,
    v: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct FrDoc {
    #[serde(rename = "F", default)]
    f: Vec<FEntry>,
    #[serde(rename = "R", default)]
    r: Vec<REntry>,
}

pub fn require_multiplicity_free(cat: &CategoryData) -> Result<()> {
    let r = cat.rank();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let value = cat.n(i, j, k);
                if value > 1 {
                    return Err(Error::NotMultiplicityFree { i, j, k, value });
                }
            }
        }
    }
    Ok(())
}

impl FrData {
    /// `f` is keyed `[a,b,c,d,e,f]` for `F^{abc}_d[e,f]`, `r` is keyed `[a,b,c]`
    /// for `R^{ab}_c`.
    pub fn new(cat: &CategoryData, f: HashMap<[Label; 6], C64>, r: HashMap<[Label; 3], C64>) -> Result<FrData> {
        require_multiplicity_free(cat)?;
        let rank = cat.rank();
        let fusion = (0..rank * rank * rank)
            .map(|x| cat.n(x / (rank * rank), (x / rank) % rank, x % rank))
            .collect();
        let mut fr = FrData { rank, fusion, f, r, blocks: HashMap::new() };
        fr.rebuild();
        Ok(fr)
    }

    fn rebuild(&mut self) {
        let r = self.rank;
        self.blocks.clear();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let es: Vec<_> = (0..r).filter(|&e| self.n(a, b, e) && self.n(e, c, d)).collect();
                        let fs: Vec<_> = (0..r).filter(|&f| self.n(b, c, f) && self.n(a, f, d)).collect();
                        if es.is_empty() && fs.is_empty() {
                            continue;
                        }
                        let m = DMatrix::from_fn(es.len(), fs.len(), |x, y| self.f(a, b, c, d, es[x], fs[y]));
                        let inv = if es.len() == fs.len() { m.try_inverse() } else { None };
                        self.blocks.insert([a, b, c, d], FBlock { es, fs, inv });
                    }
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn n(&self, a: Label, b: Label, c: Label) -> bool {
        let r = self.rank;
        self.fusion[(a * r + b) * r + c] > 0
    }

    fn admissible(&self, a: Label, b: Label, c: Label, d: Label, e: Label, f: Label) -> bool {
        self.n(a, b, e) && self.n(e, c, d) && self.n(b, c, f) && self.n(a, f, d)
    }

    /// `F^{abc}_d[e,f]`, zero off the admissible set.
    pub fn f(&self, a: Label, b: Label, c: Label, d: Label, e: Label, f: Label) -> C64 {
        if !self.admissible(a, b, c, d, e, f) {
            return C64::default();
        }
        self.f.get(&[a, b, c, d, e, f]).copied().unwrap_or(c64(1.0, 0.0))
    }

    /// `(F^{abc}_d)⁻¹[f,e]`; NaN when the block is singular.
    pub fn f_inv(&self, a: Label, b: Label, c: Label, d: Label, f: Label, e: Label) -> C64 {
        let Some(block) = self.blocks.get(&[a, b, c, d]) else {
            return C64::default();
        };
        let (Some(x), Some(y)) = (block.fs.iter().position(|&v| v == f), block.es.iter().position(|&v| v == e)) else {
            return C64::default();
        };
        match &block.inv {
            Some(m) => m[(x, y)],
            None => c64(f64::NAN, f64::NAN),
        }
    }

    /// `R^{ab}_c`, zero when `c ∉ a⊗b`, one when either input is the unit.
    pub fn r(&self, a: Label, b: Label, c: Label) -> C64 {
        if !self.n(a, b, c) {
            return C64::default();
        }
        if a == 0 || b == 0 {
            return c64(1.0, 0.0);
        }
        self.r.get(&[a, b, c]).copied().unwrap_or(c64(1.0, 0.0))
    }

    /// Overwrites one F entry and recomputes inverse blocks.
    pub fn with_f(mut self, key: [Label; 6], v: C64) -> FrData {
        self.f.insert(key, v);
        self.rebuild();
        self
    }

    pub fn with_r(mut self, key: [Label; 3], v: C64) -> FrData {
        self.r.insert(key, v);
        self
    }

    pub fn from_json_str(cat: &CategoryData, text: &str) -> Result<FrData> {
        let doc: FrDoc = serde_json::from_str(text)?;
        let r = cat.rank();
        let bad = |what: &str| Error::Shape(format!("{what} label out of range"));
        let mut f = HashMap::new();
        for e in doc.f {
            let key = [e.i, e.j, e.k, e.l, e.m, e.n];
            if key.iter().any(|&x| x >= r) {
                return Err(bad("F"));
            }
            f.insert(key, c64(e.v[0], e.v[1]));
        }
        let mut rr = HashMap::new();
        for e in doc.r {
            let key = [e.i, e.j, e.k];
            if key.iter().any(|&x| x >= r) {
                return Err(bad("R"));
            }
            rr.insert(key, c64(e.v[0], e.v[1]));
        }
        FrData::new(cat, f, rr)
    }

    pub fn from_json_file(cat: &CategoryData, path: impl AsRef<std::path::Path>) -> Result<FrData> {
        FrData::from_json_str(cat, &std::fs::read_to_string(path)?)
    }

    /// Every admissible entry, explicitly.
    pub fn to_json(&self) -> String {
        let r = self.rank;
        let mut doc = FrDoc { f: Vec::new(), r: Vec::new() };
        for key in sextuples(r) {
            let [a, b, c, d, e, f] = key;
            if self.admissible(a, b, c, d, e, f) {
                let v = self.f(a, b, c, d, e, f);
                doc.f.push(FEntry { i: a, j: b, k: c, l: d, m: e, n: f, v: [v.re, v.im] });
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    if self.n(a, b, c) {
                        let v = self.r(a, b, c);
                        doc.r.push(REntry { i: a, j: b, k: c, v: [v.re, v.im] });
                    }
                }
            }
        }
        serde_json::to_string_pretty(&doc).expect("F/R serializes")
    }

    /// Embedded tables for a builtin category (or product of builtins),
    /// looked up by the category's name.
    pub fn builtin(cat: &CategoryData) -> Result<FrData> {
        let parts = split_product(cat.name());
        if parts.len() > 1 {
            let mut it = parts.into_iter();
            let first = crate::source::load_category(it.next().expect("non-empty"))?;
            let mut acc_cat = first.clone();
            let mut acc = FrData::builtin(&first)?;
            for p in it {
                let c = crate::source::load_category(p)?;
                let fr = FrData::builtin(&c)?;
                let next_cat = CategoryData::product(&acc_cat, &c);
                acc = FrData::product(&acc, &fr, &next_cat)?;
                acc_cat = next_cat;
            }
            if acc_cat.rank() != cat.rank() {
                return Err(Error::MissingFr(cat.name().into()));
            }
            return Ok(acc);
        }
        let spec = parse_builtin_spec(cat.name()).map_err(|_| Error::MissingFr(cat.name().into()))?;
        let mut f = HashMap::new();
        let mut r = HashMap::new();
        let e = |x: f64| C64::from_polar(1.0, x);
        match spec.name.as_str() {
            "trivial" | "rep_z2" => {}
            "fibonacci" => {
                let phi = (1.0 + 5f64.sqrt()) / 2.0;
                let t = 1;
                for (ei, fi, v) in [(0, 0, 1.0 / phi), (0, 1, phi.powf(-0.5)), (1, 0, phi.powf(-0.5)), (1, 1, -1.0 / phi)] {
                    f.insert([t, t, t, t, ei, fi], c64(v, 0.0));
                }
                r.insert([t, t, 0], e(-4.0 * PI / 5.0));
                r.insert([t, t, t], e(3.0 * PI / 5.0));
            }
            "ising" => {
                let h = 0.5f64.sqrt();
                let (s, p) = (1, 2);
                for (ei, fi, v) in [(0, 0, h), (0, p, h), (p, 0, h), (p, p, -h)] {
                    f.insert([s, s, s, s, ei, fi], c64(v, 0.0));
                }
                f.insert([s, p, s, p, s, s], c64(-1.0, 0.0));
                f.insert([p, s, p, s, s, s], c64(-1.0, 0.0));
                r.insert([s, s, 0], e(-PI / 8.0));
                r.insert([s, s, p], e(3.0 * PI / 8.0));
                r.insert([s, p, s], c64(0.0, -1.0));
                r.insert([p, s, s], c64(0.0, -1.0));
                r.insert([p, p, 0], c64(-1.0, 0.0));
            }
            "semion" => {
                f.insert([1, 1, 1, 1, 0, 0], c64(-1.0, 0.0));
                r.insert([1, 1, 0], c64(0.0, 1.0));
            }
            "cyclic" => {
                let n = cat.rank();
                let q = spec.params.get("q").copied().unwrap_or(0).rem_euclid(n as i64) as usize;
                for a in 0..n {
                    for b in 0..n {
                        r.insert([a, b, (a + b) % n], e(2.0 * PI * ((q * a * b) % n) as f64 / n as f64));
                    }
                }
            }
            "su2" => {
                let k = cat.rank() - 1;
                su2_tables(k, &mut f, &mut r);
            }
            _ => return Err(Error::MissingFr(cat.name().into())),
        }
        FrData::new(cat, f, r)
    }

    /// Componentwise product for a Deligne product category whose labels are
    /// `x = i·rank_b + j`.
    pub fn product(a: &FrData, b: &FrData, cat: &CategoryData) -> Result<FrData> {
        let rb = b.rank;
        if cat.rank() != a.rank * rb {
            return Err(Error::Shape("product F/R rank mismatch".into()));
        }
        let sp = |x: Label| (x / rb, x % rb);
        let mut f = HashMap::new();
        let r = cat.rank();
        for key in sextuples(r) {
            let [x0, x1, x2, x3, x4, x5] = key.map(sp);
            let v = a.f(x0.0, x1.0, x2.0, x3.0, x4.0, x5.0) * b.f(x0.1, x1.1, x2.1, x3.1, x4.1, x5.1);
            if v != C64::default() && v != c64(1.0, 0.0) {
                f.insert(key, v);
            }
        }
        let mut rr = HashMap::new();
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let (p, q, s) = (sp(x), sp(y), sp(z));
                    let v = a.r(p.0, q.0, s.0) * b.r(p.1, q.1, s.1);
                    if v != C64::default() {
                        rr.insert([x, y, z], v);
                    }
                }
            }
        }
        FrData::new(cat, f, rr)
    }
}

fn sextuples(r: usize) -> impl Iterator<Item = [Label; 6]> {
    (0..r.pow(6)).map(move |mut x| {
        let mut out = [0; 6];
        for slot in out.iter_mut().rev() {
            *slot = x % r;
            x /= r;
        }
        out
    })
}

/// SU(2)_k F and R symbols on doubled spins, in the unitary gauge where every
/// F with a unit among `a, b, c` is `1`.
fn su2_tables(k: usize, f: &mut HashMap<[Label; 6], C64>, r: &mut HashMap<[Label; 3], C64>) {
    let h = PI / (k as f64 + 2.0);
    let qn = |n: usize| (n as f64 * h).sin() / h.sin();
    let qf = |n: usize| (1..=n).map(qn).product::<f64>();
    let adm = |a: usize, b: usize, c: usize| crate::category::su2_admissible(k, a, b, c);
    let delta = |a: usize, b: usize, c: usize| {
        (qf((a + b - c) / 2) * qf((a + c - b) / 2) * qf((b + c - a) / 2) / qf((a + b + c) / 2 + 1)).sqrt()
    };
    // quantum 6j symbol {a b e; c d f} via the Racah formula
    let sixj = |a: usize, b: usize, e: usize, c: usize, d: usize, ff: usize| -> f64 {
        let tri = [(a, b, e), (e, c, d), (b, c, ff), (a, ff, d)];
        let pref: f64 = tri.iter().map(|&(x, y, z)| delta(x, y, z)).product();
        let zmin = tri.iter().map(|&(x, y, z)| (x + y + z) / 2).max().unwrap();
        let zmax = [(a + b + c + d) / 2, (a + e + c + ff) / 2, (b + e + d + ff) / 2].into_iter().min().unwrap();
        let mut sum = 0.0;
        for z in zmin..=zmax {
            let mut den = qf((a + b + c + d) / 2 - z) * qf((a + e + c + ff) / 2 - z) * qf((b + e + d + ff) / 2 - z);
            for &(x, y, w) in &tri {
                den *= qf(z - (x + y + w) / 2);
            }
            let sign = if z % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * qf(z + 1) / den;
        }
        pref * sum
    };
    let n = k + 1;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        for ff in 0..n {
                            if !(adm(a, b, e) && adm(e, c, d) && adm(b, c, ff) && adm(a, ff, d)) {
                                continue;
                            }
                            let sign = if ((a + b + c + d) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                            let v = sign * (qn(e + 1) * qn(ff + 1)).sqrt() * sixj(a, b, e, c, d, ff);
                            f.insert([a, b, c, d, e, ff], c64(v, 0.0));
                        }
                    }
                }
            }
        }
    }
    let cas = |a: usize| (a * (a + 2)) as f64 / 4.0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if adm(a, b, c) {
                    let sign = if ((a + b - c) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    let phase = 2.0 * h * (cas(c) - cas(a) - cas(b)) / 2.0;
                    r.insert([a, b, c], C64::from_polar(sign, phase));
                }
            }
        }
    }
}

/// Pentagon, both hexagons, the ribbon monodromy relation and the twist read
/// off from `R^{aa}`.
pub fn validate_fr(cat: &CategoryData, fr: &FrData, tol: f64) -> Result<Report> {
    require_multiplicity_free(cat)?;
    if fr.rank != cat.rank() {
        return Err(Error::Shape("F/R data and category have different ranks".into()));
    }
    let r = cat.rank();
    let ch = |a: Label, b: Label| (0..r).filter(move |&c| cat.n(a, b, c) > 0);
    let mut pent = Vec::new();
    let mut hex = Vec::new();
    let mut hex_inv = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    for e in 0..r {
                        for f in ch(a, b) {
                            for g in ch(f, c).filter(|&g| cat.n(g, d, e) > 0) {
                                for l in ch(c, d) {
                                    for k in ch(b, l).filter(|&k| cat.n(a, k, e) > 0) {
                                        let lhs = fr.f(f, c, d, e, g, l) * fr.f(a, b, l, e, f, k);
                                        let rhs: C64 = (0..r)
                                            .map(|h| fr.f(a, b, c, g, f, h) * fr.f(a, h, d, e, g, k) * fr.f(b, c, d, k, h, l))
                                            .sum();
                                        pent.push((vec![a, b, c, d, e, f, g, k, l], (lhs - rhs).norm()));
                                    }
                                }
                            }
                        }
                    }
                    // hexagons over F^{acb}_d[e,g]
                    for e in ch(a, c) {
                        for g in ch(c, b) {
                            if cat.n(e, b, d) == 0 || cat.n(a, g, d) == 0 {
                                continue;
                            }
                            let lhs = fr.r(c, a, e) * fr.f(a, c, b, d, e, g) * fr.r(c, b, g);
                            let rhs: C64 = (0..r)
                                .map(|f| fr.f(c, a, b, d, e, f) * fr.r(c, f, d) * fr.f(a, b, c, d, f, g))
                                .sum();
                            hex.push((vec![a, b, c, d, e, g], (lhs - rhs).norm()));
                            let ri = |x: Label, y: Label, z: Label| {
                                let v = fr.r(y, x, z);
                                if v == C64::default() { v } else { 1.0 / v }
                            };
                            let lhs = ri(c, a, e) * fr.f(a, c, b, d, e, g) * ri(c, b, g);
                            let rhs: C64 = (0..r)
                                .map(|f| fr.f(c, a, b, d, e, f) * ri(c, f, d) * fr.f(a, b, c, d, f, g))
                                .sum();
                            hex_inv.push((vec![a, b, c, d, e, g], (lhs - rhs).norm()));
                        }
                    }
                }
            }
        }
    }
    let mut rep = Report::new();
    rep.push(CheckResult::from_residuals("pentagon", tol, pent));
    rep.push(CheckResult::from_residuals("hexagon", tol, hex));
    rep.push(CheckResult::from_residuals("inverse hexagon", tol, hex_inv));
    let mut mono = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for c in ch(a, b) {
                let lhs = fr.r(a, b, c) * fr.r(b, a, c);
                let rhs = cat.theta(c) / (cat.theta(a) * cat.theta(b));
                mono.push((vec![a, b, c], (lhs - rhs).norm()));
            }
        }
    }
    rep.push(CheckResult::from_residuals("R-twist consistency", tol, mono));
    rep.push(CheckResult::from_residuals(
        "twist from R",
        tol,
        (0..r).map(|a| {
            let t: C64 = ch(a, a).map(|c| cat.d(c) / cat.d(a) * fr.r(a, a, c)).sum();
            (vec![a], (t - cat.theta(a)).norm())
        }),
    ));
    Ok(rep)
}
