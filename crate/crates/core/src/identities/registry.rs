use std::time::Instant;

use num_bigint::BigInt;

use super::{Params, Status, VerificationReport, VerifyError, Witness};
use crate::qseries::{
    ag_part_allowed, ag_product, apply_marking, basic_sum, inv_pochhammer, marked_ag, marked_expansion_base,
    marked_product, multisum_f, pochhammer, pochhammer_plus, qint_base, Count, ProductSpec, SeriesError,
};
use crate::Series;

type Builder = Box<dyn Fn(&Params, usize) -> Result<Series, SeriesError> + Send + Sync>;
type Hypothesis = Box<dyn Fn(&Params) -> Result<(), String> + Send + Sync>;

/// A series identity `lhs = rhs` with its parameter domain.
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    /// Parameter names the builders read (`M`, `k`, `a`, `N`, `q`).
    pub params: &'static [&'static str],
    /// Parameter sets swept by the suite.
    pub sweep: Vec<Params>,
    pub default_cutoff: usize,
    hypothesis: Hypothesis,
    lhs: Builder,
    rhs: Builder,
}

impl IdentitySpec {
    /// Checks that required parameters are present and satisfy the hypothesis.
    pub fn check(&self, p: &Params) -> Result<(), VerifyError> {
        for name in self.params {
            p.get(self.id, name)?;
        }
        (self.hypothesis)(p).map_err(|hypothesis| VerifyError::Hypothesis {
            id: self.id.to_string(),
            hypothesis,
        })
    }

    pub fn lhs(&self, p: &Params, cutoff: usize) -> Result<Series, VerifyError> {
        self.check(p)?;
        Ok((self.lhs)(p, cutoff)?)
    }

    pub fn rhs(&self, p: &Params, cutoff: usize) -> Result<Series, VerifyError> {
        self.check(p)?;
        Ok((self.rhs)(p, cutoff)?)
    }
}

fn m_of(p: &Params) -> usize {
    p.m.unwrap_or(0)
}

fn need_residue(m: usize, modulus: usize, residues: &[usize], text: &str) -> Result<(), String> {
    if m >= 1 && residues.contains(&(m % modulus)) {
        Ok(())
    } else {
        Err(format!("M={m} must satisfy {text}"))
    }
}

fn residue_product(modulus: usize, residues: &[usize], cutoff: usize) -> Result<Series, SeriesError> {
    let mut s = Series::one(cutoff);
    for &r in residues {
        let start = if r == 0 { modulus } else { r };
        s = s.mul(&inv_pochhammer(start, modulus, Count::Infinite, cutoff)?)?;
    }
    Ok(s)
}

/// `[M]_q / (1 - w q^M)`.
fn marked_ones(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut s = qint_base(m, 1, cutoff);
    s.div_factor(m, 1)?;
    Ok(s)
}

/// `sum_{j>=2} q^{e(j)} / (q^2;q)_{j-1}` for increasing exponents `e`.
fn drop_first_tail(e: impl Fn(usize) -> usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut total = Series::zero(cutoff);
    let mut inv = Series::one(cutoff);
    for j in 2.. {
        if e(j) > cutoff {
            break;
        }
        inv.div_factor(j, 0)?;
        total.add_assign(&inv.shift_q(e(j)))?;
    }
    Ok(total)
}

/// `sum_{j>=2} q^{e(j)} (-q^3;q^2)_{j-1} / (q^4;q^2)_{j-1}`.
fn gg_tail(e: impl Fn(usize) -> usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut total = Series::zero(cutoff);
    for j in 2.. {
        if e(j) > cutoff {
            break;
        }
        let t = pochhammer_plus::<BigInt>(3, 2, Count::Finite(j - 1), cutoff)?
            .mul(&inv_pochhammer(4, 2, Count::Finite(j - 1), cutoff)?)?;
        total.add_assign(&t.shift_q(e(j)))?;
    }
    Ok(total)
}

/// `sum_j q^{e(j)} / (q;q)_j`.
fn plain_sum(e: impl Fn(usize) -> usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut total = Series::zero(cutoff);
    let mut inv = Series::one(cutoff);
    for j in 0.. {
        if e(j) > cutoff {
            break;
        }
        if j > 0 {
            inv.div_factor(j, 0)?;
        }
        total.add_assign(&inv.shift_q(e(j)))?;
    }
    Ok(total)
}

/// `sum_n q^{e(n)} (-q;q^2)_n / (q^2;q^2)_n`.
fn gg_sum(e: impl Fn(usize) -> usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut total = Series::zero(cutoff);
    for n in 0.. {
        if e(n) > cutoff {
            break;
        }
        let t = pochhammer_plus::<BigInt>(1, 2, Count::Finite(n), cutoff)?
            .mul(&inv_pochhammer(2, 2, Count::Finite(n), cutoff)?)?;
        total.add_assign(&t.shift_q(e(n)))?;
    }
    Ok(total)
}

fn rr1_product(cutoff: usize) -> Result<Series, SeriesError> {
    residue_product(5, &[1, 4], cutoff)
}

fn rr2_product(cutoff: usize) -> Result<Series, SeriesError> {
    residue_product(5, &[2, 3], cutoff)
}

/// Right side of the marked first Rogers-Ramanujan identity.
pub(crate) fn rr1x_rhs(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut first = qint_base::<BigInt>(m - 1, 1, cutoff);
    first.add_assign(&Series::monomial(BigInt::from(1), m - 1, 1, cutoff))?;
    let mut first = first.shift_q(1);
    first.div_factor(m, 1)?;
    let tail = drop_first_tail(|k| k * k, cutoff)?.mul(&marked_ones(m, cutoff)?)?;
    let mut s = Series::one(cutoff);
    s.add_assign(&first)?;
    s.add_assign(&tail)?;
    Ok(s)
}

/// Right side of the marked second Rogers-Ramanujan identity (`M >= 2`).
pub(crate) fn rr2x_rhs(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut first = qint_base::<BigInt>(m - 2, 1, cutoff);
    first.add_assign(&Series::monomial(BigInt::from(1), m - 2, 1, cutoff))?;
    first.add_assign(&Series::q_power(m - 1, cutoff))?;
    let mut first = first.shift_q(2);
    first.div_factor(m, 1)?;
    let tail = drop_first_tail(|k| k * k + k, cutoff)?.mul(&marked_ones(m, cutoff)?)?;
    let mut s = Series::one(cutoff);
    s.add_assign(&first)?;
    s.add_assign(&tail)?;
    Ok(s)
}

fn euler_marked_rhs(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    // (q + ... + q^{M-1} + w q^M) / (1 - w q^M)
    let mut first = qint_base::<BigInt>(m - 1, 1, cutoff).shift_q(1);
    first.add_assign(&Series::monomial(BigInt::from(1), m, 1, cutoff))?;
    first.div_factor(m, 1)?;
    let tail = drop_first_tail(|j| j * (j + 1) / 2, cutoff)?.mul(&marked_ones(m, cutoff)?)?;
    let mut s = Series::one(cutoff);
    s.add_assign(&first)?;
    s.add_assign(&tail)?;
    Ok(s)
}

fn odd_marked_product(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    marked_product(&ProductSpec::from_predicate(|p| p % 2 == 1, cutoff).mark(m), cutoff)
}

fn gg1x_rhs(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut first = qint_base::<BigInt>(m - 1, 1, cutoff).shift_q(1);
    first.add_assign(&Series::monomial(BigInt::from(1), m, 1, cutoff))?;
    first.div_factor(m, 1)?;
    let tail = gg_tail(|j| j * j, cutoff)?.mul(&marked_ones(m, cutoff)?)?;
    let mut s = Series::one(cutoff);
    s.add_assign(&first)?;
    s.add_assign(&tail)?;
    Ok(s)
}

fn gg2x_rhs(m: usize, cutoff: usize) -> Result<Series, SeriesError> {
    // q^3 + ... + q^{M-1} + w q^M + q^{M+1} + q^{M+2}
    let mut first = qint_base::<BigInt>(m - 3, 1, cutoff).shift_q(3);
    first.add_assign(&Series::monomial(BigInt::from(1), m, 1, cutoff))?;
    first.add_assign(&Series::q_power(m + 1, cutoff))?;
    first.add_assign(&Series::q_power(m + 2, cutoff))?;
    first.div_factor(m, 1)?;
    let tail = gg_tail(|j| j * j + 2 * j, cutoff)?.mul(&marked_ones(m, cutoff)?)?;
    let mut s = Series::one(cutoff);
    s.add_assign(&first)?;
    s.add_assign(&tail)?;
    Ok(s)
}

/// `(q^{k+1-a}, q^{k+2+a}, q^{2k+3}; q^{2k+3})_inf / (q;q)_inf`.
fn ag_lhs(k: usize, a: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let modulus = 2 * k + 3;
    let mut s = inv_pochhammer::<BigInt>(1, 1, Count::Infinite, cutoff)?;
    for start in [k + 1 - a, k + 2 + a, modulus] {
        s = s.mul(&pochhammer(start, modulus, Count::Infinite, cutoff)?)?;
    }
    Ok(s)
}

fn check_ag(p: &Params) -> Result<(usize, usize), String> {
    let (k, a) = (p.k.unwrap_or(0), p.a.unwrap_or(0));
    if k < 1 || a > k {
        return Err(format!("need k >= 1 and 0 <= a <= k, got k={k}, a={a}"));
    }
    Ok((k, a))
}

/// The six single-sum families `alpha_j` with their base `d`.
#[derive(Clone, Copy, Debug)]
enum Family {
    Rr1,
    Rr2,
    Euler,
    Gg,
    Largest,
    Durfee,
}

impl Family {
    fn base(self) -> usize {
        match self {
            Family::Gg => 2,
            _ => 1,
        }
    }

    fn alpha(self, cutoff: usize) -> Result<Vec<Series>, SeriesError> {
        (0..=cutoff)
            .map(|j| match self {
                Family::Rr1 => Ok(Series::q_power(j * j, cutoff)),
                Family::Rr2 => Ok(Series::q_power(j * j + j, cutoff)),
                Family::Euler => Ok(Series::q_power(j * (j + 1) / 2, cutoff)),
                Family::Gg => Ok(pochhammer_plus::<BigInt>(1, 2, Count::Finite(j), cutoff)?.shift_q(j * j)),
                Family::Largest => Ok(Series::q_power(j, cutoff)),
                Family::Durfee => Ok(inv_pochhammer::<BigInt>(1, 1, Count::Finite(j), cutoff)?.shift_q(j * j)),
            })
            .collect()
    }
}

fn mainprop(id: &'static str, description: &'static str, family: Family) -> IdentitySpec {
    IdentitySpec {
        id,
        description,
        params: &["M"],
        sweep: (1..=20).map(Params::with_m).collect(),
        default_cutoff: 50,
        hypothesis: Box::new(|p| if m_of(p) >= 1 { Ok(()) } else { Err("M >= 1".into()) }),
        lhs: Box::new(move |p, c| {
            let d = family.base();
            apply_marking(&basic_sum(&family.alpha(c)?, d, c)?, d * m_of(p))
        }),
        rhs: Box::new(move |p, c| marked_expansion_base(&family.alpha(c)?, m_of(p), family.base(), c)),
    }
}

fn in_class(range: std::ops::RangeInclusive<usize>, modulus: usize, residues: &'static [usize]) -> Vec<Params> {
    range
        .filter(|m| residues.contains(&(m % modulus)))
        .map(Params::with_m)
        .collect()
}

fn shift_rr_hyp(p: &Params) -> Result<(), String> {
    let (m, n) = (m_of(p), p.n_shift.unwrap_or(0));
    need_residue(m, 5, &[1, 4], "M ≡ 1 or 4 (mod 5)")?;
    if n <= m || [1, 4].contains(&(n % 5)) {
        return Err(format!("N={n} must exceed M={m} and satisfy N ≢ 1, 4 (mod 5)"));
    }
    Ok(())
}

fn shift_euler_hyp(p: &Params) -> Result<(), String> {
    let (m, n) = (m_of(p), p.n_shift.unwrap_or(0));
    if m % 2 == 0 {
        return Err(format!("M={m} must be odd"));
    }
    if n <= m || n % 2 == 1 {
        return Err(format!("N={n} must be even and exceed M={m}"));
    }
    Ok(())
}

/// `[m]_q` for an integer `q`, saturating.
fn qint_value(m: usize, q: usize) -> usize {
    let mut v: usize = 0;
    let mut pow: usize = 1;
    for _ in 0..m {
        v = v.saturating_add(pow);
        pow = pow.saturating_mul(q);
    }
    v
}

fn qeuler_lhs(q: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut s = Series::one(cutoff);
    for n in 0.. {
        let e = qint_value(2 * n + 1, q);
        if e > cutoff {
            break;
        }
        s.div_factor(e, 0)?;
    }
    Ok(s)
}

fn qeuler_rhs(q: usize, cutoff: usize) -> Result<Series, SeriesError> {
    let mut total = Series::one(cutoff);
    // running product over k < m of (1 - t^{(q^k+1)[k]}) / (1 - t^{[k]})
    let mut running = Series::one(cutoff);
    let mut q_pow: usize = 1;
    for m in 1.. {
        let qm = qint_value(m, q);
        if qm > cutoff {
            break;
        }
        q_pow = q_pow.saturating_mul(q);
        let mut term = running.shift_q(qm);
        term.mul_factor(q_pow.saturating_mul(qm), 0)?;
        term.div_factor(qm, 0)?;
        total.add_assign(&term)?;
        running.mul_factor(q_pow.saturating_add(1).saturating_mul(qm), 0)?;
        running.div_factor(qm, 0)?;
    }
    Ok(total)
}

/// Every series identity in scope.
pub fn registry() -> Vec<IdentitySpec> {
    let all_ag: Vec<Params> = (1..=3).flat_map(|k| (0..=k).map(move |a| Params::with_ka(k, a))).collect();
    let agbig_sweep: Vec<Params> = all_ag
        .iter()
        .flat_map(|p| {
            let (k, a) = (p.k.unwrap(), p.a.unwrap());
            (1..=20)
                .filter(move |&m| ag_part_allowed(k, a, m))
                .map(move |m| Params::with_ka(k, a).m(m))
        })
        .collect();
    let shift_rr_sweep: Vec<Params> = [1, 4, 6, 9, 11]
        .into_iter()
        .flat_map(|m| {
            (m + 1..=30)
                .filter(|n| ![1, 4].contains(&(n % 5)))
                .map(move |n| Params::with_m(m).n_shift(n))
        })
        .collect();
    let shift_euler_sweep: Vec<Params> = (1..=9)
        .step_by(2)
        .flat_map(|m| (m + 1..=24).filter(|n| n % 2 == 0).map(move |n| Params::with_m(m).n_shift(n)))
        .collect();

    vec![
        IdentitySpec {
            id: "rr1",
            description: "first Rogers-Ramanujan identity",
            params: &[],
            sweep: vec![Params::none()],
            default_cutoff: 80,
            hypothesis: Box::new(|_| Ok(())),
            lhs: Box::new(|_, c| rr1_product(c)),
            rhs: Box::new(|_, c| plain_sum(|k| k * k, c)),
        },
        IdentitySpec {
            id: "rr2",
            description: "second Rogers-Ramanujan identity",
            params: &[],
            sweep: vec![Params::none()],
            default_cutoff: 80,
            hypothesis: Box::new(|_| Ok(())),
            lhs: Box::new(|_, c| rr2_product(c)),
            rhs: Box::new(|_, c| plain_sum(|k| k * k + k, c)),
        },
        IdentitySpec {
            id: "rr1x",
            description: "first Rogers-Ramanujan identity with part M marked",
            params: &["M"],
            sweep: in_class(1..=30, 5, &[1, 4]),
            default_cutoff: 60,
            hypothesis: Box::new(|p| need_residue(m_of(p), 5, &[1, 4], "M ≡ 1 or 4 (mod 5)")),
            lhs: Box::new(|p, c| apply_marking(&rr1_product(c)?, m_of(p))),
            rhs: Box::new(|p, c| rr1x_rhs(m_of(p), c)),
        },
        IdentitySpec {
            id: "rr2x",
            description: "second Rogers-Ramanujan identity with part M marked",
            params: &["M"],
            sweep: in_class(2..=30, 5, &[2, 3]),
            default_cutoff: 60,
            hypothesis: Box::new(|p| need_residue(m_of(p), 5, &[2, 3], "M >= 2 and M ≡ 2 or 3 (mod 5)")),
            lhs: Box::new(|p, c| apply_marking(&rr2_product(c)?, m_of(p))),
            rhs: Box::new(|p, c| rr2x_rhs(m_of(p), c)),
        },
        mainprop("mainprop-rr1", "general marked expansion, alpha_j = q^{j^2}", Family::Rr1),
        mainprop("mainprop-rr2", "general marked expansion, alpha_j = q^{j^2+j}", Family::Rr2),
        mainprop("mainprop-euler", "general marked expansion, alpha_j = q^{j(j+1)/2}", Family::Euler),
        mainprop(
            "mainprop-gg",
            "general marked expansion in base q^2, alpha_j = q^{j^2}(-q;q^2)_j, marked part 2M",
            Family::Gg,
        ),
        mainprop("mainprop-largest", "general marked expansion, alpha_j = q^j", Family::Largest),
        mainprop("mainprop-durfee", "general marked expansion, alpha_j = q^{j^2}/(q;q)_j", Family::Durfee),
        IdentitySpec {
            id: "euler-marked",
            description: "odd parts with part M marked against the distinct-parts expansion",
            params: &["M"],
            sweep: (1..=29).step_by(2).map(Params::with_m).collect(),
            default_cutoff: 60,
            hypothesis: Box::new(|p| need_residue(m_of(p), 2, &[1], "M odd")),
            lhs: Box::new(|p, c| odd_marked_product(m_of(p), c)),
            rhs: Box::new(|p, c| euler_marked_rhs(m_of(p), c)),
        },
        IdentitySpec {
            id: "gg1",
            description: "first Göllnitz-Gordon identity",
            params: &[],
            sweep: vec![Params::none()],
            default_cutoff: 60,
            hypothesis: Box::new(|_| Ok(())),
            lhs: Box::new(|_, c| gg_sum(|n| n * n, c)),
            rhs: Box::new(|_, c| residue_product(8, &[1, 4, 7], c)),
        },
        IdentitySpec {
            id: "gg2",
            description: "second Göllnitz-Gordon identity",
            params: &[],
            sweep: vec![Params::none()],
            default_cutoff: 60,
            hypothesis: Box::new(|_| Ok(())),
            lhs: Box::new(|_, c| gg_sum(|n| n * n + 2 * n, c)),
            rhs: Box::new(|_, c| residue_product(8, &[3, 4, 5], c)),
        },
        IdentitySpec {
            id: "gg1x",
            description: "first Göllnitz-Gordon identity with part M marked",
            params: &["M"],
            sweep: (1..=29).map(Params::with_m).collect(),
            default_cutoff: 60,
            hypothesis: Box::new(|p| if m_of(p) >= 1 { Ok(()) } else { Err("M >= 1".into()) }),
            lhs: Box::new(|p, c| apply_marking(&residue_product(8, &[1, 4, 7], c)?, m_of(p))),
            rhs: Box::new(|p, c| gg1x_rhs(m_of(p), c)),
        },
        IdentitySpec {
            id: "gg2x",
            description: "second Göllnitz-Gordon identity with part M marked",
            params: &["M"],
            sweep: (3..=29).map(Params::with_m).collect(),
            default_cutoff: 60,
            hypothesis: Box::new(|p| {
                if m_of(p) >= 3 {
                    Ok(())
                } else {
                    Err(format!("M={} must be at least 3", m_of(p)))
                }
            }),
            lhs: Box::new(|p, c| apply_marking(&residue_product(8, &[3, 4, 5], c)?, m_of(p))),
            rhs: Box::new(|p, c| gg2x_rhs(m_of(p), c)),
        },
        IdentitySpec {
            id: "ag",
            description: "Andrews-Gordon identity, product against multisum",
            params: &["k", "a"],
            sweep: all_ag,
            default_cutoff: 40,
            hypothesis: Box::new(|p| check_ag(p).map(|_| ())),
            lhs: Box::new(|p, c| ag_lhs(p.k.unwrap(), p.a.unwrap(), c)),
            rhs: Box::new(|p, c| multisum_f(p.k.unwrap(), p.a.unwrap(), c)),
        },
        IdentitySpec {
            id: "agbig",
            description: "Andrews-Gordon identity with part M marked",
            params: &["k", "a", "M"],
            sweep: agbig_sweep,
            default_cutoff: 40,
            hypothesis: Box::new(|p| {
                let (k, a) = check_ag(p)?;
                let m = m_of(p);
                if ag_part_allowed(k, a, m) {
                    Ok(())
                } else {
                    Err(format!("M={m} must not be congruent to 0 or ±{} modulo {}", k + 1 - a, 2 * k + 3))
                }
            }),
            lhs: Box::new(|p, c| {
                let (k, a) = (p.k.unwrap(), p.a.unwrap());
                apply_marking(&ag_product(k, a, None, c)?, m_of(p))
            }),
            rhs: Box::new(|p, c| marked_ag(p.k.unwrap(), p.a.unwrap(), m_of(p), c)),
        },
        IdentitySpec {
            id: "shift-rr",
            description: "first Rogers-Ramanujan identity with parts M replaced by N",
            params: &["M", "N"],
            sweep: shift_rr_sweep,
            default_cutoff: 60,
            hypothesis: Box::new(shift_rr_hyp),
            lhs: Box::new(|p, c| {
                let (m, n) = (m_of(p), p.n_shift.unwrap());
                let mut s = rr1_product(c)?;
                s.mul_factor(m, 0)?;
                s.div_factor(n, 0)?;
                Ok(s)
            }),
            rhs: Box::new(|p, c| rr1x_rhs(m_of(p), c)?.substitute_w(p.n_shift.unwrap() - m_of(p))),
        },
        IdentitySpec {
            id: "shift23",
            description: "first Rogers-Ramanujan identity with parts 1, 4 replaced by 2, 3",
            params: &[],
            sweep: vec![Params::none()],
            default_cutoff: 60,
            hypothesis: Box::new(|_| Ok(())),
            lhs: Box::new(|_, c| {
                let mut s = inv_pochhammer::<BigInt>(6, 5, Count::Infinite, c)?
                    .mul(&inv_pochhammer(9, 5, Count::Infinite, c)?)?;
                s.div_factor(2, 0)?;
                s.div_factor(3, 0)?;
                Ok(s)
            }),
            rhs: Box::new(|_, c| {
                // 1 + q^2(1+q)/(1-q^3) + sum_{k>=2} q^{k^2}/(q^2;q)_{k-1} (1+q^2)/(1-q^3)
                let mut first = Series::from_q_coeffs(&[0, 0, 1, 1], c)?;
                first.div_factor(3, 0)?;
                let mut factor = Series::from_q_coeffs(&[1, 0, 1], c)?;
                factor.div_factor(3, 0)?;
                let mut s = Series::one(c);
                s.add_assign(&first)?;
                s.add_assign(&drop_first_tail(|k| k * k, c)?.mul(&factor)?)?;
                Ok(s)
            }),
        },
        IdentitySpec {
            id: "shift-euler",
            description: "odd parts with parts M replaced by the even part N",
            params: &["M", "N"],
            sweep: shift_euler_sweep,
            default_cutoff: 60,
            hypothesis: Box::new(shift_euler_hyp),
            lhs: Box::new(|p, c| {
                let (m, n) = (m_of(p), p.n_shift.unwrap());
                let mut s = marked_product(&ProductSpec::from_predicate(|x| x % 2 == 1 && x != m, c), c)?;
                s.div_factor(n, 0)?;
                Ok(s)
            }),
            rhs: Box::new(|p, c| euler_marked_rhs(m_of(p), c)?.substitute_w(p.n_shift.unwrap() - m_of(p))),
        },
        IdentitySpec {
            id: "qeuler",
            description: "q-analogue of Euler's theorem at integer q, as a series in t",
            params: &["q"],
            sweep: vec![Params::none().base(2), Params::none().base(3)],
            default_cutoff: 50,
            hypothesis: Box::new(|p| {
                if p.base.unwrap_or(0) >= 1 {
                    Ok(())
                } else {
                    Err("q must be a positive integer".into())
                }
            }),
            lhs: Box::new(|p, c| qeuler_lhs(p.base.unwrap(), c)),
            rhs: Box::new(|p, c| qeuler_rhs(p.base.unwrap(), c)),
        },
    ]
}

pub fn find_series(id: &str) -> Result<IdentitySpec, VerifyError> {
    let all = registry();
    let known: Vec<String> = all.iter().map(|s| s.id.to_string()).collect();
    all.into_iter()
        .find(|s| s.id == id)
        .ok_or(VerifyError::UnknownId { id: id.to_string(), known })
}

/// Compares both sides coefficientwise through `cutoff`.
pub fn verify_series(id: &str, params: &Params, cutoff: usize) -> Result<VerificationReport, VerifyError> {
    let spec = find_series(id)?;
    let start = Instant::now();
    let lhs = spec.lhs(params, cutoff)?;
    let rhs = spec.rhs(params, cutoff)?;
    let witness = lhs.first_difference(&rhs).map(|(q_exp, w_exp)| Witness::Coefficient {
        q_exp,
        w_exp,
        lhs: lhs.coeff(q_exp, w_exp).to_string(),
        rhs: rhs.coeff(q_exp, w_exp).to_string(),
    });
    Ok(VerificationReport {
        id: id.to_string(),
        params: params.clone(),
        cutoff: Some(cutoff),
        n_max: None,
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
        notes: Vec::new(),
        elapsed_ms: start.elapsed().as_millis(),
    })
}
