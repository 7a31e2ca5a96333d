use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;

use super::{Params, Status, VerificationReport, VerifyError, Witness};
use crate::durfee::{ag_statistic, is_admissible};
use crate::partitions::{
    embed_count, enumerate, mark_statistic, shift_statistic, ConstraintSet, Partition, StatisticId,
};
use crate::qseries::ag_part_allowed;

/// Partitions of one `n` grouped by their `k` value, each group in canonical
/// order.
pub type Tally = BTreeMap<usize, Vec<Partition>>;

/// How the left (product) side assigns `k`.
#[derive(Clone, Debug)]
enum LeftCount {
    Multiplicity(usize),
    Embed(Partition),
    /// Every partition counts at `k = 0`.
    Plain,
}

/// How the right (sum) side assigns `k`.
#[derive(Clone, Debug)]
enum RightStat {
    Mark(StatisticId, usize),
    /// Membership filter; members count at `k = 0`.
    Shift(StatisticId, usize, usize),
    Ag { k: usize, a: usize, m: usize },
}

struct Sides {
    left: ConstraintSet,
    left_count: LeftCount,
    right: ConstraintSet,
    right_stat: RightStat,
}

impl Sides {
    fn left_tally(&self, n: usize) -> Result<Tally, VerifyError> {
        let mut t = Tally::new();
        for mu in enumerate(n, &self.left) {
            let k = match &self.left_count {
                LeftCount::Multiplicity(m) => mu.multiplicity(*m),
                LeftCount::Embed(l) => embed_count(l, &mu)?,
                LeftCount::Plain => 0,
            };
            t.entry(k).or_default().push(mu);
        }
        Ok(t)
    }

    fn right_tally(&self, n: usize) -> Result<Tally, VerifyError> {
        let mut t = Tally::new();
        for lambda in enumerate(n, &self.right) {
            let k = match &self.right_stat {
                RightStat::Mark(id, m) => Some(mark_statistic(*id, &lambda, *m)?),
                RightStat::Shift(id, m, nn) => shift_statistic(*id, &lambda, *m, *nn)?.then_some(0),
                RightStat::Ag { k, a, m } => {
                    if is_admissible(&lambda, *k, *a) {
                        Some(ag_statistic(&lambda, *m, *k, *a)?)
                    } else {
                        None
                    }
                }
            };
            if let Some(k) = k {
                t.entry(k).or_default().push(lambda);
            }
        }
        Ok(t)
    }
}

type Hypothesis = Box<dyn Fn(&Params) -> Result<(), String> + Send + Sync>;
type SidesBuilder = Box<dyn Fn(&Params) -> Result<Sides, VerifyError> + Send + Sync>;

/// A combinatorial theorem: two partition families refined by `k`.
pub struct CombSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub params: &'static [&'static str],
    pub sweep: Vec<Params>,
    pub default_n_max: usize,
    hypothesis: Hypothesis,
    sides: SidesBuilder,
}

impl CombSpec {
    pub fn check(&self, p: &Params) -> Result<(), VerifyError> {
        for name in self.params {
            match *name {
                "lambda" => {
                    p.partition(self.id, name)?;
                }
                _ => {
                    p.get(self.id, name)?;
                }
            }
        }
        (self.hypothesis)(p).map_err(|hypothesis| VerifyError::Hypothesis {
            id: self.id.to_string(),
            hypothesis,
        })
    }

    fn sides(&self, p: &Params) -> Result<Sides, VerifyError> {
        self.check(p)?;
        (self.sides)(p)
    }

    /// Left and right partitions of `n`, grouped by `k`.
    pub fn tallies(&self, p: &Params, n: usize) -> Result<(Tally, Tally), VerifyError> {
        let s = self.sides(p)?;
        Ok((s.left_tally(n)?, s.right_tally(n)?))
    }
}

fn m_of(p: &Params) -> usize {
    p.m.unwrap_or(0)
}

fn residue_hyp(modulus: usize, residues: &'static [usize], text: &'static str) -> Hypothesis {
    Box::new(move |p| {
        let m = m_of(p);
        if m >= 1 && residues.contains(&(m % modulus)) {
            Ok(())
        } else {
            Err(format!("M={m} must satisfy {text}"))
        }
    })
}

fn residues(modulus: usize, rs: &[usize]) -> ConstraintSet {
    ConstraintSet::residues(modulus, rs).expect("static residue set")
}

fn marked(
    id: &'static str,
    description: &'static str,
    modulus: usize,
    class: &'static [usize],
    text: &'static str,
    stat: StatisticId,
) -> CombSpec {
    CombSpec {
        id,
        description,
        params: &["M"],
        sweep: (1..=12)
            .filter(|m| class.contains(&(m % modulus)))
            .map(Params::with_m)
            .collect(),
        default_n_max: 36,
        hypothesis: residue_hyp(modulus, class, text),
        sides: Box::new(move |p| {
            Ok(Sides {
                left: residues(modulus, class),
                left_count: LeftCount::Multiplicity(m_of(p)),
                right: stat.constraint(),
                right_stat: RightStat::Mark(stat, m_of(p)),
            })
        }),
    }
}

fn partitions_into(total: usize, modulus: usize, class: &[usize]) -> Vec<Partition> {
    enumerate(total, &residues(modulus, class))
}

fn extend(
    id: &'static str,
    description: &'static str,
    class: &'static [usize],
    text: &'static str,
    stat: StatisticId,
) -> CombSpec {
    let sweep = (1..=12)
        .flat_map(|m| partitions_into(m, 5, class))
        .map(|l| Params::none().lambda(l))
        .collect();
    CombSpec {
        id,
        description,
        params: &["lambda"],
        sweep,
        default_n_max: 36,
        hypothesis: Box::new(move |p| {
            let l = p.lambda.as_ref().ok_or("lambda required")?;
            if l.is_empty() || l.parts().iter().any(|x| !class.contains(&(x % 5))) {
                return Err(format!("lambda={l} must be a non-empty partition into parts {text}"));
            }
            if p.m.is_some_and(|m| m != l.weight()) {
                return Err(format!("M must equal |lambda| = {}", l.weight()));
            }
            Ok(())
        }),
        sides: Box::new(move |p| {
            let l = p.lambda.clone().expect("checked");
            Ok(Sides {
                left: residues(5, class),
                right: stat.constraint(),
                right_stat: RightStat::Mark(stat, l.weight()),
                left_count: LeftCount::Embed(l),
            })
        }),
    }
}

/// Every combinatorial theorem with a witness-set interpretation.
pub fn comb_registry() -> Vec<CombSpec> {
    let ag_sweep: Vec<Params> = (1..=3)
        .flat_map(|k| (0..=k).map(move |a| (k, a)))
        .flat_map(|(k, a)| {
            (1..=12)
                .filter(move |&m| ag_part_allowed(k, a, m))
                .map(move |m| Params::with_ka(k, a).m(m))
        })
        .collect();
    let shift_sweep: Vec<Params> = [1, 4, 6, 9, 11]
        .into_iter()
        .flat_map(|m| {
            (m + 1..=16)
                .filter(|n| ![1, 4].contains(&(n % 5)))
                .map(move |n| Params::with_m(m).n_shift(n))
        })
        .collect();
    let shift2_sweep: Vec<Params> = (1..=11)
        .step_by(2)
        .flat_map(|m| (m + 1..=16).filter(|n| n % 2 == 0).map(move |n| Params::with_m(m).n_shift(n)))
        .collect();

    vec![
        marked(
            "rrxcomb1",
            "parts ≡ 1,4 (mod 5) with k M's vs gap-2 partitions by the first difference",
            5,
            &[1, 4],
            "M ≡ 1 or 4 (mod 5)",
            StatisticId::Rr1Mark,
        ),
        marked(
            "rrx2comb1",
            "parts ≡ 2,3 (mod 5) with k M's vs gap-2 partitions without 1's by the first difference",
            5,
            &[2, 3],
            "M ≡ 2 or 3 (mod 5)",
            StatisticId::Rr2Mark,
        ),
        marked(
            "rrxcomb2",
            "parts ≡ 1,4 (mod 5) with k M's vs gap-2 partitions, staircase reading for long partitions",
            5,
            &[1, 4],
            "M ≡ 1 or 4 (mod 5)",
            StatisticId::Rr1Star,
        ),
        marked(
            "rrx2comb2",
            "parts ≡ 2,3 (mod 5) with k M's vs gap-2 partitions without 1's, staircase reading",
            5,
            &[2, 3],
            "M ≡ 2 or 3 (mod 5)",
            StatisticId::Rr2Star,
        ),
        marked(
            "combthm2",
            "odd parts with k M's vs distinct parts by the first difference",
            2,
            &[1],
            "M odd",
            StatisticId::EulerMark,
        ),
        marked(
            "combthm3",
            "odd parts with k M's vs distinct parts, staircase reading for long partitions",
            2,
            &[1],
            "M odd",
            StatisticId::EulerSt,
        ),
        marked(
            "ggxcomb",
            "parts ≡ 1,4,7 (mod 8) with k M's vs Göllnitz-Gordon partitions",
            8,
            &[1, 4, 7],
            "M ≡ 1, 4 or 7 (mod 8)",
            StatisticId::Gg1Mark,
        ),
        marked(
            "ggxcombm",
            "parts ≡ 3,4,5 (mod 8) with k M's vs Göllnitz-Gordon partitions with smallest part at least 3",
            8,
            &[3, 4, 5],
            "M ≡ 3, 4 or 5 (mod 8)",
            StatisticId::Gg2Mark,
        ),
        CombSpec {
            id: "agcombm",
            description: "Andrews-Gordon parts with j M's vs admissible partitions by Durfee dissection",
            params: &["k", "a", "M"],
            sweep: ag_sweep,
            default_n_max: 24,
            hypothesis: Box::new(|p| {
                let (k, a, m) = (p.k.unwrap_or(0), p.a.unwrap_or(0), m_of(p));
                if k < 1 || a > k {
                    return Err(format!("need k >= 1 and 0 <= a <= k, got k={k}, a={a}"));
                }
                if !ag_part_allowed(k, a, m) {
                    return Err(format!(
                        "M={m} must not be congruent to 0 or ±{} modulo {}",
                        k + 1 - a,
                        2 * k + 3
                    ));
                }
                Ok(())
            }),
            sides: Box::new(|p| {
                let (k, a, m) = (p.k.unwrap(), p.a.unwrap(), m_of(p));
                let modulus = 2 * k + 3;
                let allowed: Vec<usize> = (0..modulus).filter(|&r| ag_part_allowed(k, a, r + modulus)).collect();
                Ok(Sides {
                    left: residues(modulus, &allowed),
                    left_count: LeftCount::Multiplicity(m),
                    right: ConstraintSet::all(),
                    right_stat: RightStat::Ag { k, a, m },
                })
            }),
        },
        CombSpec {
            id: "shiftcomb",
            description: "parts ≡ 1,4 (mod 5) with M replaced by N vs gap-2 partitions in a residue window",
            params: &["M", "N"],
            sweep: shift_sweep,
            default_n_max: 36,
            hypothesis: Box::new(|p| {
                let (m, n) = (m_of(p), p.n_shift.unwrap_or(0));
                if m < 1 || ![1, 4].contains(&(m % 5)) {
                    return Err(format!("M={m} must satisfy M ≡ 1 or 4 (mod 5)"));
                }
                if n <= m || [1, 4].contains(&(n % 5)) {
                    return Err(format!("N={n} must exceed M={m} and satisfy N ≢ 1, 4 (mod 5)"));
                }
                Ok(())
            }),
            sides: Box::new(|p| {
                let (m, n) = (m_of(p), p.n_shift.unwrap());
                Ok(Sides {
                    left: residues(5, &[1, 4]).exclude(m).include(n),
                    left_count: LeftCount::Plain,
                    right: StatisticId::ShiftRr.constraint(),
                    right_stat: RightStat::Shift(StatisticId::ShiftRr, m, n),
                })
            }),
        },
        CombSpec {
            id: "weirdshift",
            description: "parts {2,3,5k+1,5k+4: k>=1} vs gap-2 partitions avoiding difference ≡ 1 (mod 3)",
            params: &[],
            sweep: vec![Params::none()],
            default_n_max: 36,
            hypothesis: Box::new(|_| Ok(())),
            sides: Box::new(|_| {
                Ok(Sides {
                    left: residues(5, &[1, 4]).exclude(1).exclude(4).include(2).include(3),
                    left_count: LeftCount::Plain,
                    right: StatisticId::Shift23.constraint(),
                    right_stat: RightStat::Shift(StatisticId::Shift23, 0, 0),
                })
            }),
        },
        CombSpec {
            id: "weirdshift2",
            description: "odd parts with M replaced by the even part N vs distinct parts in a residue window",
            params: &["M", "N"],
            sweep: shift2_sweep,
            default_n_max: 36,
            hypothesis: Box::new(|p| {
                let (m, n) = (m_of(p), p.n_shift.unwrap_or(0));
                if m % 2 == 0 {
                    return Err(format!("M={m} must be odd"));
                }
                if n <= m || n % 2 == 1 {
                    return Err(format!("N={n} must be even and exceed M={m}"));
                }
                Ok(())
            }),
            sides: Box::new(|p| {
                let (m, n) = (m_of(p), p.n_shift.unwrap());
                Ok(Sides {
                    left: residues(2, &[1]).exclude(m).include(n),
                    left_count: LeftCount::Plain,
                    right: StatisticId::ShiftEuler.constraint(),
                    right_stat: RightStat::Shift(StatisticId::ShiftEuler, m, n),
                })
            }),
        },
        extend(
            "extendrrcomb",
            "copies of lambda inside partitions into parts ≡ 1,4 (mod 5) vs gap-2 partitions",
            &[1, 4],
            "≡ 1 or 4 (mod 5)",
            StatisticId::Rr1Mark,
        ),
        extend(
            "extendrr2comb",
            "copies of lambda inside partitions into parts ≡ 2,3 (mod 5) vs gap-2 partitions without 1's",
            &[2, 3],
            "≡ 2 or 3 (mod 5)",
            StatisticId::Rr2Mark,
        ),
    ]
}

pub fn find_comb(id: &str) -> Result<CombSpec, VerifyError> {
    let all = comb_registry();
    if let Some(pos) = all.iter().position(|s| s.id == id) {
        return Ok(all.into_iter().nth(pos).expect("index in range"));
    }
    if super::registry().iter().any(|s| s.id == id) {
        return Err(VerifyError::NoCombinatorialPair(id.to_string()));
    }
    let known = all.iter().map(|s| s.id.to_string()).collect();
    Err(VerifyError::UnknownId { id: id.to_string(), known })
}

/// Both equinumerous sets at `(n, k)`, canonical order.
pub fn witness_sets(
    id: &str,
    params: &Params,
    n: usize,
    k: usize,
) -> Result<(Vec<Partition>, Vec<Partition>), VerifyError> {
    let spec = find_comb(id)?;
    let (mut left, mut right) = spec.tallies(params, n)?;
    Ok((left.remove(&k).unwrap_or_default(), right.remove(&k).unwrap_or_default()))
}

fn sizes(t: &Tally) -> BTreeMap<usize, usize> {
    t.iter().map(|(&k, v)| (k, v.len())).collect()
}

/// Checks every `n <= n_max` and every `k`.
pub fn verify_combinatorial(id: &str, params: &Params, n_max: usize) -> Result<VerificationReport, VerifyError> {
    let spec = find_comb(id)?;
    let sides = spec.sides(params)?;
    let start = Instant::now();
    let results: Vec<(usize, Tally, Tally)> = (0..=n_max)
        .into_par_iter()
        .map(|n| Ok((n, sides.left_tally(n)?, sides.right_tally(n)?)))
        .collect::<Result<_, VerifyError>>()?;
    let mut witness = None;
    for (n, left, right) in results {
        let (ls, rs) = (sizes(&left), sizes(&right));
        if ls == rs {
            continue;
        }
        let keys: BTreeSet<usize> = ls.keys().chain(rs.keys()).copied().collect();
        let k = keys
            .into_iter()
            .find(|k| ls.get(k) != rs.get(k))
            .expect("maps differ at some key");
        let l = left.get(&k).cloned().unwrap_or_default();
        let r = right.get(&k).cloned().unwrap_or_default();
        let only_left = l.iter().filter(|x| !r.contains(x)).cloned().collect();
        let only_right = r.iter().filter(|x| !l.contains(x)).cloned().collect();
        witness = Some(Witness::Sets {
            n,
            k,
            left: l,
            right: r,
            only_left,
            only_right,
        });
        break;
    }
    Ok(VerificationReport {
        id: id.to_string(),
        params: params.clone(),
        cutoff: None,
        n_max: Some(n_max),
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
        notes: Vec::new(),
        elapsed_ms: start.elapsed().as_millis(),
    })
}
