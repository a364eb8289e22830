use std::collections::BTreeMap;
use std::f64::consts::PI;

use super::CategoryData;
use crate::{c64, Error, Result, C64};

#[derive(Clone, Copy, Debug)]
pub struct BuiltinInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

const BUILTINS: &[BuiltinInfo] = &[
    BuiltinInfo { name: "trivial", params: &[], summary: "Vec, the unit category" },
    BuiltinInfo { name: "fibonacci", params: &[], summary: "Fibonacci anyons {1, τ}" },
    BuiltinInfo { name: "ising", params: &[], summary: "Ising anyons {1, σ, ψ}" },
    BuiltinInfo { name: "semion", params: &[], summary: "semion {1, s}" },
    BuiltinInfo { name: "rep_z2", params: &[], summary: "Rep(Z2), symmetric premodular {1, ψ}" },
    BuiltinInfo { name: "cyclic", params: &["n", "q"], summary: "pointed Z_n with twist ζ^(q a²); modular iff gcd(2q, n) = 1" },
    BuiltinInfo { name: "su2", params: &["k"], summary: "SU(2) level k, labels are spins 0, 1/2, ..., k/2" },
];

pub fn builtin_names() -> &'static [BuiltinInfo] {
    BUILTINS
}

fn param(family: &str, params: &BTreeMap<String, i64>, key: &str) -> Result<i64> {
    params.get(key).copied().ok_or_else(|| Error::InvalidParameter {
        family: family.into(),
        reason: format!("missing parameter `{key}`"),
    })
}

fn expi(x: f64) -> C64 {
    C64::from_polar(1.0, x)
}

fn reals(v: &[f64]) -> Vec<C64> {
    v.iter().map(|&x| c64(x, 0.0)).collect()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Dense fusion tensor from a rule returning the channel multiplicity.
fn tensor(r: usize, f: impl Fn(usize, usize, usize) -> u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(r * r * r);
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                out.push(f(i, j, k));
            }
        }
    }
    out
}

pub fn load_builtin(name: &str, params: &BTreeMap<String, i64>) -> Result<CategoryData> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    match name {
        "trivial" => CategoryData::new(name, names(&["1"]), vec![0], vec![1], reals(&[1.0]), reals(&[1.0]), None),
        "fibonacci" => CategoryData::new(
            name,
            names(&["1", "τ"]),
            vec![0, 1],
            tensor(2, |i, j, k| match (i, j) {
                (1, 1) => 1,
                _ => u32::from(i + j == k),
            }),
            reals(&[1.0, phi]),
            vec![c64(1.0, 0.0), expi(4.0 * PI / 5.0)],
            None,
        ),
        "ising" => CategoryData::new(
            name,
            names(&["1", "σ", "ψ"]),
            vec![0, 1, 2],
            tensor(3, |i, j, k| {
                let rule: &[usize] = match (i, j) {
                    (0, x) | (x, 0) => &[x],
                    (1, 1) => &[0, 2],
                    (1, 2) | (2, 1) => &[1],
                    _ => &[0],
                };
                u32::from(rule.contains(&k))
            }),
            reals(&[1.0, 2f64.sqrt(), 1.0]),
            vec![c64(1.0, 0.0), expi(PI / 8.0), c64(-1.0, 0.0)],
            None,
        ),
        "semion" | "rep_z2" => {
            let (labels, theta) = if name == "semion" {
                (names(&["1", "s"]), c64(0.0, 1.0))
            } else {
                (names(&["1", "ψ"]), c64(1.0, 0.0))
            };
            CategoryData::new(
                name,
                labels,
                vec![0, 1],
                tensor(2, |i, j, k| u32::from((i + j) % 2 == k)),
                reals(&[1.0, 1.0]),
                vec![c64(1.0, 0.0), theta],
                None,
            )
        }
        "cyclic" => {
            let n = param(name, params, "n")?;
            let q = param(name, params, "q")?;
            if n < 1 {
                return Err(Error::InvalidParameter { family: name.into(), reason: format!("n must be >= 1, got {n}") });
            }
            let n = n as usize;
            let q = q.rem_euclid(n as i64) as usize;
            let labels = (0..n)
                .map(|a| match a {
                    0 => "1".to_string(),
                    1 => "ω".to_string(),
                    _ => format!("ω^{a}"),
                })
                .collect();
            let zeta = |e: usize| expi(2.0 * PI * (e % n) as f64 / n as f64);
            CategoryData::new(
                format!("cyclic({n},{q})"),
                labels,
                (0..n).map(|a| (n - a) % n).collect(),
                tensor(n, |a, b, c| u32::from((a + b) % n == c)),
                vec![c64(1.0, 0.0); n],
                (0..n).map(|a| zeta(q * a * a)).collect(),
                None,
            )
        }
        "su2" => {
            let k = param(name, params, "k")?;
            if k < 1 {
                return Err(Error::InvalidParameter { family: name.into(), reason: format!("level k must be >= 1, got {k}") });
            }
            let k = k as usize;
            let r = k + 1;
            let labels = (0..r)
                .map(|a| if a % 2 == 0 { (a / 2).to_string() } else { format!("{a}/2") })
                .collect();
            let qd = |a: usize| ((a as f64 + 1.0) * PI / (k as f64 + 2.0)).sin() / (PI / (k as f64 + 2.0)).sin();
            // doubled spins; conformal weight j(j+1)/(k+2) with j = a/2
            let twist = |a: usize| expi(2.0 * PI * (a * (a + 2)) as f64 / (4.0 * (k as f64 + 2.0)));
            CategoryData::new(
                format!("su2({k})"),
                labels,
                (0..r).collect(),
                tensor(r, |a, b, c| u32::from(su2_admissible(k, a, b, c))),
                (0..r).map(|a| c64(qd(a), 0.0)).collect(),
                (0..r).map(twist).collect(),
                None,
            )
        }
        _ => Err(Error::UnknownCategory(name.into())),
    }
}

/// Truncated Clebsch-Gordan rule on doubled spins.
pub(crate) fn su2_admissible(k: usize, a: usize, b: usize, c: usize) -> bool {
    (a + b + c).is_multiple_of(2) && c + a >= b && c + b >= a && c <= a + b && a + b + c <= 2 * k
}
