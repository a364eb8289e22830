//! Genus-g Verlinde algebra for multiplicity-free categories.
//!
//! An element of `V_g^{(A)}` is a family of morphisms
//! `A ⊗ X_{i₁} ⊗ ⋯ ⊗ X_{i_g} → X_{i₁} ⊗ ⋯ ⊗ X_{i_g}`, one per leaf tuple,
//! stored as [`TreeOp`] blocks. The boundary object `A` is a (possibly empty)
//! prefix of the source leaves; the unit is represented by the empty prefix.

mod fr;
mod tree;

use std::collections::BTreeMap;

pub use fr::{require_multiplicity_free, validate_fr, FrData};
pub use tree::TreeOp;

use tree::{block_swap, interleave, reverse_word, shift, Move, Trees};

use crate::category::CategoryData;
use crate::report::{CheckResult, Report};
use crate::verlinde::VerlindeElement;
use crate::{c64, Error, Label, Result, C64};

#[derive(Clone, Debug, PartialEq)]
pub struct GenusElement {
    pub g: usize,
    pub boundary: Vec<Label>,
    pub comps: BTreeMap<Vec<Label>, TreeOp>,
}

impl GenusElement {
    pub fn component(&self, tuple: &[Label]) -> Option<&TreeOp> {
        self.comps.get(tuple)
    }

    pub fn scale(&self, k: C64) -> GenusElement {
        GenusElement {
            g: self.g,
            boundary: self.boundary.clone(),
            comps: self.comps.iter().map(|(t, op)| (t.clone(), op.scale(k))).collect(),
        }
    }

    fn accumulate(&mut self, tuple: Vec<Label>, op: TreeOp) {
        match self.comps.get_mut(&tuple) {
            Some(cur) => cur.add_assign(&op),
            None => {
                self.comps.insert(tuple, op);
            }
        }
    }

    pub fn add(&self, other: &GenusElement) -> Result<GenusElement> {
        if self.g != other.g || self.boundary != other.boundary {
            return Err(Error::Shape("elements live in different spaces".into()));
        }
        let mut out = self.clone();
        for (t, op) in &other.comps {
            out.accumulate(t.clone(), op.clone());
        }
        Ok(out)
    }

    /// Max-entry distance; missing components count as zero.
    pub fn distance(&self, other: &GenusElement) -> f64 {
        let mut worst: f64 = 0.0;
        for (t, a) in &self.comps {
            worst = worst.max(match other.comps.get(t) {
                Some(b) => a
                    .blocks
                    .iter()
                    .zip(&b.blocks)
                    .flat_map(|(x, y)| x.iter().zip(y.iter()).map(|(u, v)| (u - v).norm()))
                    .fold(0.0, f64::max),
                None => a.max_abs(),
            });
        }
        for (t, b) in &other.comps {
            if !self.comps.contains_key(t) {
                worst = worst.max(b.max_abs());
            }
        }
        worst
    }
}

/// Evaluator for the generalized operations on one category with F/R data.
pub struct GenusEngine<'a> {
    trees: Trees<'a>,
}

fn tuples(r: usize, g: usize) -> impl Iterator<Item = Vec<Label>> {
    (0..r.pow(g as u32)).map(move |mut x| {
        let mut t = vec![0; g];
        for slot in t.iter_mut().rev() {
            *slot = x % r;
            x /= r;
        }
        t
    })
}

impl<'a> GenusEngine<'a> {
    pub fn new(cat: &'a CategoryData, fr: &'a FrData) -> Result<Self> {
        require_multiplicity_free(cat)?;
        if fr.rank() != cat.rank() {
            return Err(Error::Shape("F/R data and category have different ranks".into()));
        }
        Ok(GenusEngine { trees: Trees::new(cat, fr) })
    }

    fn cat(&self) -> &CategoryData {
        self.trees.cat
    }

    fn boundary_of(a: Label) -> Vec<Label> {
        if a == 0 { Vec::new() } else { vec![a] }
    }

    /// Matrix units of every `V_{(i₁..i_g);k}^{(A)}`.
    pub fn enumerate_basis(&self, g: usize, a: Label) -> Result<Vec<GenusElement>> {
        if g == 0 {
            return Err(Error::InvalidArgument("genus must be at least 1".into()));
        }
        let r = self.cat().rank();
        if a >= r {
            return Err(Error::InvalidArgument(format!("label {a} out of range")));
        }
        let boundary = Self::boundary_of(a);
        let mut out = Vec::new();
        for t in tuples(r, g) {
            let src = [&boundary[..], &t[..]].concat();
            for k in 0..r {
                let (nd, ns) = (self.trees.trees(&t, k).len(), self.trees.trees(&src, k).len());
                for i in 0..nd {
                    for j in 0..ns {
                        let mut op = self.trees.zero(&src, &t);
                        op.blocks[k][(i, j)] = c64(1.0, 0.0);
                        out.push(GenusElement { g, boundary: boundary.clone(), comps: BTreeMap::from([(t.clone(), op)]) });
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Σ_i c_i id_{X_i}` in `V_1`.
    pub fn from_verlinde(&self, x: &VerlindeElement) -> GenusElement {
        let mut comps = BTreeMap::new();
        for (i, &c) in x.coeffs().iter().enumerate() {
            if c != C64::default() {
                comps.insert(vec![i], self.trees.identity(&[i]).scale(c));
            }
        }
        GenusElement { g: 1, boundary: Vec::new(), comps }
    }

    /// `Π δ_{i_m j_m}/d_{i_m} · y ∘ (id_B ⊗ x)` for `x ∈ V^{(A)}`, `y ∈ V^{(B)}`;
    /// the result lives in `V^{(BA)}`.
    pub fn gen_convolution(&self, x: &GenusElement, y: &GenusElement) -> Result<GenusElement> {
        if x.g != y.g {
            return Err(Error::Shape(format!("genus {} vs {}", x.g, y.g)));
        }
        let boundary = [&y.boundary[..], &x.boundary[..]].concat();
        let mut out = GenusElement { g: x.g, boundary: boundary.clone(), comps: BTreeMap::new() };
        for (t, p) in &x.comps {
            let Some(q) = y.comps.get(t) else { continue };
            let w: C64 = t.iter().map(|&i| c64(1.0, 0.0) / self.cat().d(i)).product();
            let lifted = self.id_tensor(&y.boundary, p);
            out.accumulate(t.clone(), q.after(&lifted).scale(w));
        }
        Ok(out)
    }

    /// `id_B ⊗ φ = c_{B,Y}⁻¹ ∘ (φ ⊗ id_B) ∘ c_{B,X}`.
    fn id_tensor(&self, b: &[Label], op: &TreeOp) -> TreeOp {
        if b.is_empty() {
            return op.clone();
        }
        let t = &self.trees;
        let over_src = t.braid_word(&[b, &op.src[..]].concat(), &block_swap(b.len(), op.src.len(), |_, _| false));
        let back = reverse_word(&block_swap(b.len(), op.dst.len(), |_, _| false));
        let over_dst = t.braid_word(&[&op.dst[..], b].concat(), &back);
        over_dst.after(&t.tensor_id(op, b)).after(&over_src)
    }

    /// `φ ⊗ φ'` on `X_{i⃗} ⊗ X_{j⃗}`.
    fn tensor(&self, p: &TreeOp, q: &TreeOp) -> TreeOp {
        let t = &self.trees;
        let (ti, tj) = (&p.src, &q.src);
        let swap = block_swap(ti.len(), tj.len(), |_, _| false);
        let cb = t.braid_word(&[&ti[..], &tj[..]].concat(), &swap);
        let cbi = t.braid_word(&[&tj[..], &ti[..]].concat(), &reverse_word(&swap));
        let right = cbi.after(&t.tensor_id(q, ti)).after(&cb);
        t.tensor_id(p, tj).after(&right)
    }

    /// Generalized fusion product (unit boundaries only).
    pub fn gen_fusion(&self, x: &GenusElement, y: &GenusElement) -> Result<GenusElement> {
        if x.g != y.g {
            return Err(Error::Shape(format!("genus {} vs {}", x.g, y.g)));
        }
        if !x.boundary.is_empty() || !y.boundary.is_empty() {
            return Err(Error::UnsupportedBoundary("the fusion product is implemented for A = B = 1".into()));
        }
        let g = x.g;
        let t = &self.trees;
        let r = self.cat().rank();
        let mut out = GenusElement { g, boundary: Vec::new(), comps: BTreeMap::new() };
        let moves = interleave(g, false);
        for (ti, p) in &x.comps {
            for (tj, q) in &y.comps {
                let w = self.tensor(p, q);
                let b = t.braid_word(&w.dst, &moves);
                let bi = t.braid_word(&b.dst, &reverse_word(&moves));
                let core = b.after(&w).after(&bi);
                let inter = core.src.clone();
                for ks in tuples(r, g) {
                    if (0..g).any(|m| self.cat().n(ti[m], tj[m], ks[m]) == 0) {
                        continue;
                    }
                    // fuse (k_1 .. k_m, i_{m+1}, j_{m+1}, ..) pair by pair
                    let mut fuse = t.identity(&inter);
                    let mut splits = Vec::new();
                    let mut cur = inter.clone();
                    for (m, &k) in ks.iter().enumerate() {
                        let f = t.fuse(&cur, m, k);
                        splits.push(t.split(&cur, m, k));
                        cur = f.dst.clone();
                        fuse = f.after(&fuse);
                    }
                    let mut split = t.identity(&cur);
                    for s in splits.iter().rev() {
                        split = s.after(&split);
                    }
                    out.accumulate(ks.clone(), fuse.after(&core).after(&split));
                }
            }
        }
        Ok(out)
    }

    /// Loop network shared by `gen_s` and `gen_sbar`: strand `i_a` links the
    /// new strand `k_b` iff `b ≤ g-1-a`.
    fn s_network(&self, x: &GenusElement, mirror: bool) -> GenusElement {
        let g = x.g;
        let t = &self.trees;
        let r = self.cat().rank();
        let pre = x.boundary.len();
        let flip = |v: Vec<Move>| -> Vec<Move> {
            if mirror { v.into_iter().map(|m| Move { p: m.p, inverse: !m.inverse }).collect() } else { v }
        };
        let links = |ia: usize, kb: usize| kb + ia < g;
        let bottom = flip(block_swap(g, g, |a, b| !links(b, a)));
        let top = flip(block_swap(g, g, |_, _| false));
        let mut out = GenusElement { g, boundary: x.boundary.clone(), comps: BTreeMap::new() };
        for (ti, p) in &x.comps {
            for ks in tuples(r, g) {
                let w = t.tensor_id(p, &ks);
                let src = [&x.boundary[..], &ks[..], &ti[..]].concat();
                let bb = t.braid_word(&src, &shift(&bottom, pre));
                let bt = t.braid_word(&w.dst, &top);
                let mut net = bt.after(&w).after(&bb);
                for _ in 0..g {
                    net = t.ptrace(&net);
                }
                let weight: C64 = ks.iter().map(|&k| self.cat().d(k)).product();
                out.accumulate(ks.clone(), net.scale(weight));
            }
        }
        out
    }

    pub fn gen_s(&self, x: &GenusElement) -> GenusElement {
        self.s_network(x, true)
    }

    pub fn gen_sbar(&self, x: &GenusElement) -> GenusElement {
        self.s_network(x, false)
    }

    /// `s̄(x·y) = s̄(x) * s̄(y)` and `s(y·x) = s(x) * s(y)` over the full basis
    /// of `V_g`.
    pub fn verify_handlebody_verlinde(&self, g: usize, tol: f64) -> Result<Report> {
        let basis = self.enumerate_basis(g, 0)?;
        let n = basis.len();
        let sbar: Vec<_> = basis.iter().map(|x| self.gen_sbar(x)).collect();
        let s: Vec<_> = basis.iter().map(|x| self.gen_s(x)).collect();
        let mut fused = Vec::with_capacity(n * n);
        for x in &basis {
            for y in &basis {
                fused.push(self.gen_fusion(x, y)?);
            }
        }
        let mut bar_res = Vec::new();
        let mut s_res = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let lhs = self.gen_sbar(&fused[a * n + b]);
                let rhs = self.gen_convolution(&sbar[a], &sbar[b])?;
                bar_res.push((vec![a, b], lhs.distance(&rhs)));
                let lhs = self.gen_s(&fused[b * n + a]);
                let rhs = self.gen_convolution(&s[a], &s[b])?;
                s_res.push((vec![a, b], lhs.distance(&rhs)));
            }
        }
        let mut rep = Report::new();
        rep.push(CheckResult::from_residuals(format!("g={g} sbar(x.y) = sbar(x)*sbar(y)"), tol, bar_res));
        rep.push(CheckResult::from_residuals(format!("g={g} s(y.x) = s(x)*s(y)"), tol, s_res));
        Ok(rep)
    }

    /// At `g = 1` the four generalized operations against their Verlinde
    /// algebra counterparts, under `x_i ↔ id_{X_i}`.
    pub fn verify_genus_one_reduction(&self, tol: f64) -> Result<Report> {
        let cat = self.cat();
        let r = cat.rank();
        let e = |i| VerlindeElement::basis(cat, i);
        let mut conv = Vec::new();
        let mut fus = Vec::new();
        let mut s = Vec::new();
        let mut sb = Vec::new();
        for i in 0..r {
            let xi = self.from_verlinde(&e(i));
            s.push((vec![i], self.gen_s(&xi).distance(&self.from_verlinde(&e(i).s_op()))));
            sb.push((vec![i], self.gen_sbar(&xi).distance(&self.from_verlinde(&e(i).sbar_op()))));
            for j in 0..r {
                let xj = self.from_verlinde(&e(j));
                let want = self.from_verlinde(&e(i).convolution(&e(j))?);
                conv.push((vec![i, j], self.gen_convolution(&xi, &xj)?.distance(&want)));
                let want = self.from_verlinde(&e(i).fusion(&e(j))?);
                fus.push((vec![i, j], self.gen_fusion(&xi, &xj)?.distance(&want)));
            }
        }
        let mut rep = Report::new();
        rep.push(CheckResult::from_residuals("g=1 convolution", tol, conv));
        rep.push(CheckResult::from_residuals("g=1 fusion", tol, fus));
        rep.push(CheckResult::from_residuals("g=1 s", tol, s));
        rep.push(CheckResult::from_residuals("g=1 sbar", tol, sb));
        Ok(rep)
    }
}
