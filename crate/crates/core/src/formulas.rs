//! Closed-form evaluators for the Turán number `t(n, r)`, the clique counts
//! `Δ^r_{t,k}` of Turán graphs, and the extremal values for hosts avoiding
//! combinations of cliques, matchings and linear forests.
//!
//! All arithmetic is 64-bit with overflow detection; binomials are computed
//! multiplicatively. Each evaluator enforces the parameter window under
//! which its value is the true extremal number; the `_unchecked` variants
//! skip the window (not the arithmetic) for exploration outside it.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("parameters outside the validity window of {formula}: {detail}")]
    OutOfWindow { formula: &'static str, detail: String },
    #[error("invalid parameter for {formula}: {detail}")]
    InvalidParameter { formula: &'static str, detail: String },
    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),
}

/// Parameter bundle shared by the theorem evaluators and verification
/// reports: host order `n`, clique parameter `r`, matching / linear-forest
/// size `s`, and the extra clique bound `k` where applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaParams {
    pub n: u64,
    pub r: u64,
    pub s: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
}

type Result<T> = std::result::Result<T, FormulaError>;

fn add(name: &'static str, a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(FormulaError::Overflow(name))
}

fn mul(name: &'static str, a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(FormulaError::Overflow(name))
}

/// Binomial coefficient `C(n, k)`, computed multiplicatively. Intermediate
/// products use 128 bits; the error reports results that do not fit 64.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(FormulaError::Overflow("binomial"))?;
        acc /= u128::from(i) + 1;
    }
    u64::try_from(acc).map_err(|_| FormulaError::Overflow("binomial"))
}

/// Part sizes of `T(n, r)` as counts (mirrors [`crate::graph::turan_part_sizes`]).
fn parts(n: u64, r: u64) -> Vec<u64> {
    let q = n / r;
    let rem = (n % r) as usize;
    let mut out = vec![q + 1; rem];
    out.extend(std::iter::repeat(q).take(r as usize - rem));
    out
}

/// Turán number `t(n, r)`: the edge count of the Turán graph `T(n, r)` and
/// the maximum edges of an n-vertex graph with no `K_{r+1}`.
pub fn turan_number(n: u64, r: u64) -> Result<u64> {
    if r == 0 {
        return Err(FormulaError::InvalidParameter {
            formula: "turan_number",
            detail: "r must be at least 1".into(),
        });
    }
    let mut total = binomial(n, 2)?;
    for p in parts(n, r) {
        total -= binomial(p, 2)?;
    }
    Ok(total)
}

/// `Δ^r_{t,k}`: the number of `K_r` subgraphs of `T(t, k)`, i.e. the r-th
/// elementary symmetric polynomial of the balanced part sizes.
pub fn turan_clique_count(t: u64, k: u64, r: u64) -> Result<u64> {
    if k == 0 || r == 0 {
        return Err(FormulaError::InvalidParameter {
            formula: "turan_clique_count",
            detail: "k and r must be at least 1".into(),
        });
    }
    let r = r as usize;
    let mut coeff = vec![0u64; r + 1];
    coeff[0] = 1;
    for p in parts(t, k) {
        for j in (1..=r).rev() {
            coeff[j] = add("turan_clique_count", coeff[j], mul("turan_clique_count", coeff[j - 1], p)?)?;
        }
    }
    Ok(coeff[r])
}

fn require_window(ok: bool, formula: &'static str, detail: String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(FormulaError::OutOfWindow { formula, detail })
    }
}

fn window_2s1(formula: &'static str, n: u64, s: u64) -> Result<()> {
    let lo = mul(formula, 2, s)?.checked_add(1).ok_or(FormulaError::Overflow(formula))?;
    require_window(n >= lo, formula, format!("need n >= 2s+1 = {lo}, got n = {n}"))
}

/// Maximum edges of an n-vertex graph with no `K_{r+1}` and no matching of
/// size `s + 1`: `max{t(2s+1, r), t(s, r-1) + (n-s)s}`. Window: `n >= 2s+1`,
/// `r >= 2`.
pub fn ex_clique_matching(n: u64, r: u64, s: u64) -> Result<u64> {
    window_2s1("ex_clique_matching", n, s)?;
    require_window(r >= 2, "ex_clique_matching", format!("need r >= 2, got r = {r}"))?;
    ex_clique_matching_unchecked(n, r, s)
}

/// [`ex_clique_matching`] without the window check.
pub fn ex_clique_matching_unchecked(n: u64, r: u64, s: u64) -> Result<u64> {
    const F: &str = "ex_clique_matching";
    if r < 2 {
        return Err(FormulaError::InvalidParameter { formula: F, detail: "r must be at least 2".into() });
    }
    let first = turan_number(add(F, mul(F, 2, s)?, 1)?, r)?;
    let spread = mul(F, n.saturating_sub(s), s)?;
    let second = add(F, turan_number(s, r - 1)?, spread)?;
    Ok(first.max(second))
}

/// Maximum `K_r` count of an n-vertex graph with no matching of size `s+1`:
/// `max{C(2s+1, r), C(s, r) + (n-s)·C(s, r-1)}`. Window: `n >= 2s+1`, `r >= 2`.
pub fn gex_matching(n: u64, r: u64, s: u64) -> Result<u64> {
    window_2s1("gex_matching", n, s)?;
    require_window(r >= 2, "gex_matching", format!("need r >= 2, got r = {r}"))?;
    gex_matching_unchecked(n, r, s)
}

/// [`gex_matching`] without the window check.
pub fn gex_matching_unchecked(n: u64, r: u64, s: u64) -> Result<u64> {
    const F: &str = "gex_matching";
    if r < 1 {
        return Err(FormulaError::InvalidParameter { formula: F, detail: "r must be at least 1".into() });
    }
    let first = binomial(add(F, mul(F, 2, s)?, 1)?, r)?;
    let second = add(
        F,
        binomial(s, r)?,
        mul(F, n.saturating_sub(s), binomial(s, r - 1)?)?,
    )?;
    Ok(first.max(second))
}

/// Maximum `K_r` count of an n-vertex graph with no linear-forest subgraph
/// of `s` edges: `max{C(s, r), C(ceil((s+1)/2), r) +
/// (n - ceil((s+1)/2))·C(floor((s-1)/2), r-1)}`. Window: `n >= s+1`, `r >= 2`,
/// `s >= 1`.
pub fn gex_linear_forest(n: u64, r: u64, s: u64) -> Result<u64> {
    require_window(s >= 1, "gex_linear_forest", format!("need s >= 1, got s = {s}"))?;
    require_window(
        n >= s + 1,
        "gex_linear_forest",
        format!("need n >= s+1 = {}, got n = {n}", s + 1),
    )?;
    require_window(r >= 2, "gex_linear_forest", format!("need r >= 2, got r = {r}"))?;
    gex_linear_forest_unchecked(n, r, s)
}

/// [`gex_linear_forest`] without the window check.
pub fn gex_linear_forest_unchecked(n: u64, r: u64, s: u64) -> Result<u64> {
    const F: &str = "gex_linear_forest";
    if s < 1 || r < 1 {
        return Err(FormulaError::InvalidParameter { formula: F, detail: "need s >= 1 and r >= 1".into() });
    }
    let half_up = s / 2 + 1; // ceil((s+1)/2)
    let half_down = (s - 1) / 2;
    if n < half_up {
        return Err(FormulaError::InvalidParameter {
            formula: F,
            detail: format!("need n >= ceil((s+1)/2) = {half_up}, got n = {n}"),
        });
    }
    let first = binomial(s, r)?;
    let second = add(
        F,
        binomial(half_up, r)?,
        mul(F, n - half_up, binomial(half_down, r - 1)?)?,
    )?;
    Ok(first.max(second))
}

/// Maximum `K_r` count of an n-vertex graph with no `K_{k+1}` and no
/// matching of size `s+1`: `max{Δ^r_{2s+1,k}, Δ^r_{s,k-1} + (n-s)·Δ^{r-1}_{s,k-1}}`.
/// Window: `n >= 2s+1`, `k >= r >= 3`.
pub fn gex_clique_matching(n: u64, k: u64, r: u64, s: u64) -> Result<u64> {
    window_2s1("gex_clique_matching", n, s)?;
    require_window(
        k >= r && r >= 3,
        "gex_clique_matching",
        format!("need k >= r >= 3, got k = {k}, r = {r}"),
    )?;
    gex_clique_matching_unchecked(n, k, r, s)
}

/// [`gex_clique_matching`] without the window check.
pub fn gex_clique_matching_unchecked(n: u64, k: u64, r: u64, s: u64) -> Result<u64> {
    const F: &str = "gex_clique_matching";
    if k < 2 || r < 2 {
        return Err(FormulaError::InvalidParameter { formula: F, detail: "need k >= 2 and r >= 2".into() });
    }
    let first = turan_clique_count(add(F, mul(F, 2, s)?, 1)?, k, r)?;
    let second = add(
        F,
        turan_clique_count(s, k - 1, r)?,
        mul(F, n.saturating_sub(s), turan_clique_count(s, k - 1, r - 1)?)?,
    )?;
    Ok(first.max(second))
}

/// Maximum edges of an n-vertex graph with no `K_{r+1}` and no linear-forest
/// subgraph of `s` edges: `max{t(s, r), t(m, r-1) + (n-m)·m}` with
/// `m = floor((s-1)/2)`. Window: `n >= 2s+1`, `r >= 2`, `s >= 1`. The two
/// candidates of [`crate::graph::extremal_construction`] attain the two
/// branches of the max.
pub fn ex_clique_linear_forest(n: u64, r: u64, s: u64) -> Result<u64> {
    window_2s1("ex_clique_linear_forest", n, s)?;
    require_window(r >= 2, "ex_clique_linear_forest", format!("need r >= 2, got r = {r}"))?;
    require_window(s >= 1, "ex_clique_linear_forest", format!("need s >= 1, got s = {s}"))?;
    ex_clique_linear_forest_unchecked(n, r, s)
}

/// [`ex_clique_linear_forest`] without the window check.
pub fn ex_clique_linear_forest_unchecked(n: u64, r: u64, s: u64) -> Result<u64> {
    const F: &str = "ex_clique_linear_forest";
    if r < 2 || s < 1 {
        return Err(FormulaError::InvalidParameter { formula: F, detail: "need r >= 2 and s >= 1".into() });
    }
    let m = (s - 1) / 2;
    if n < m {
        return Err(FormulaError::InvalidParameter {
            formula: F,
            detail: format!("need n >= floor((s-1)/2) = {m}, got n = {n}"),
        });
    }
    let first = turan_number(s, r)?;
    let second = add(F, turan_number(m, r - 1)?, mul(F, n - m, m)?)?;
    Ok(first.max(second))
}
