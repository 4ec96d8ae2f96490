//! Structured self-validation: the full cross-module consistency suite at
//! a configurable scale, shared by the command-line front end and the
//! integration tests.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::bijection::{factorization_to_tree, tree_to_factorization};
use crate::cactus::{arrange, cactus_to_tree, check_arrangeable, tree_to_cactus};
use crate::enumeration::{
    brute_force_classes_capped, count_by_profile, count_trees, enumerate_trees,
};
use crate::error::Error;
use crate::genfunc::{catalan_check, g_series_forms, xi_series};
use crate::perm::text::{parse_factorization, parse_multiset};
use crate::perm::{Factorization, TypeVector};
use crate::Int;

/// Problem sizes for one suite run.
#[derive(Debug, Clone)]
pub struct Scale {
    pub roundtrip_weight: usize,
    pub count_weight: usize,
    pub catalan_max: usize,
    pub profile_weight: usize,
    pub distinct_weight: usize,
    pub cactus_weight: usize,
    pub arrange_n: usize,
    pub oracle_cap: usize,
}

impl Scale {
    /// The reference scale used by the integration suite.
    pub fn acceptance() -> Self {
        Scale {
            roundtrip_weight: 5,
            count_weight: 5,
            catalan_max: 8,
            profile_weight: 4,
            distinct_weight: 5,
            cactus_weight: 4,
            arrange_n: 6,
            oracle_cap: 7,
        }
    }

    /// A uniform scale derived from a single weight bound.
    pub fn with_weight(w: usize, oracle_cap: usize) -> Self {
        let w = w.max(1);
        Scale {
            roundtrip_weight: w,
            count_weight: w.min(oracle_cap.saturating_sub(1)),
            catalan_max: 2 * w,
            profile_weight: w,
            distinct_weight: w.min(oracle_cap.saturating_sub(1)),
            cactus_weight: w,
            arrange_n: (w + 1).min(oracle_cap),
            oracle_cap,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Outcome = Result<String, String>;

/// Shared brute-force results so the suite enumerates each word space once.
#[derive(Default)]
struct OracleCache {
    classes: BTreeMap<TypeVector, Vec<Factorization>>,
}

impl OracleCache {
    fn classes(&mut self, alpha: &TypeVector, cap: usize) -> Result<&[Factorization], String> {
        let n = alpha.weight() + 1;
        if !self.classes.contains_key(alpha) {
            let found = brute_force_classes_capped(alpha, n, cap)
                .map_err(|e| format!("oracle failed at {alpha}: {e}"))?;
            self.classes.insert(alpha.clone(), found);
        }
        Ok(&self.classes[alpha])
    }
}

fn all_alphas(max_weight: usize) -> impl Iterator<Item = TypeVector> {
    (1..=max_weight).flat_map(TypeVector::all_with_weight)
}

/// Runs every check at the given scale, timing each.
pub fn run_all(scale: &Scale) -> Vec<CheckResult> {
    let mut cache = OracleCache::default();
    let checks: Vec<(&'static str, Box<dyn FnOnce(&mut OracleCache) -> Outcome>)> = vec![
        (
            "bijection roundtrip",
            Box::new({
                let s = scale.clone();
                move |_: &mut OracleCache| check_bijection_roundtrip(s.roundtrip_weight)
            }),
        ),
        (
            "triple count agreement",
            Box::new({
                let s = scale.clone();
                move |c: &mut OracleCache| check_triple_count(s.count_weight, s.oracle_cap, c)
            }),
        ),
        (
            "catalan identity",
            Box::new({
                let s = scale.clone();
                move |_: &mut OracleCache| check_catalan(s.catalan_max)
            }),
        ),
        (
            "head/tail profiles",
            Box::new({
                let s = scale.clone();
                move |_: &mut OracleCache| check_profiles(s.profile_weight)
            }),
        ),
        (
            "worked examples",
            Box::new(|_: &mut OracleCache| check_worked_examples()),
        ),
        (
            "increasing factors and distinct multisets",
            Box::new({
                let s = scale.clone();
                move |c: &mut OracleCache| check_distinctness(s.distinct_weight, s.oracle_cap, c)
            }),
        ),
        (
            "cactus roundtrip and arrange",
            Box::new({
                let s = scale.clone();
                move |c: &mut OracleCache| {
                    check_cactus(s.cactus_weight, s.arrange_n, s.oracle_cap, c)
                }
            }),
        ),
    ];

    checks
        .into_iter()
        .map(|(name, run)| {
            let start = Instant::now();
            let outcome = run(&mut cache);
            let millis = start.elapsed().as_millis();
            match outcome {
                Ok(detail) => CheckResult {
                    name,
                    passed: true,
                    detail,
                    millis,
                },
                Err(detail) => CheckResult {
                    name,
                    passed: false,
                    detail,
                    millis,
                },
            }
        })
        .collect()
}

fn check_bijection_roundtrip(max_weight: usize) -> Outcome {
    let mut trees = 0usize;
    for alpha in all_alphas(max_weight) {
        for tree in enumerate_trees(&alpha) {
            let f = tree_to_factorization(&tree)
                .map_err(|e| format!("inversion failed at {alpha}: {e}"))?;
            if f != f.canonical_form() {
                return Err(format!("non-canonical inverse at {alpha}: {f}"));
            }
            let back = factorization_to_tree(&f)
                .map_err(|e| format!("forward map failed at {alpha}: {e}"))?;
            if back != tree {
                return Err(format!("roundtrip mismatch at {alpha} for {f}"));
            }
            trees += 1;
        }
    }
    Ok(format!("{trees} trees, weight <= {max_weight}"))
}

fn check_triple_count(max_weight: usize, cap: usize, cache: &mut OracleCache) -> Outcome {
    let xi = xi_series::<Int>(max_weight);
    for alpha in all_alphas(max_weight) {
        let from_xi = xi.coefficient_alpha(&alpha);
        let from_trees = count_trees(&alpha);
        let from_oracle = Int::from(cache.classes(&alpha, cap)?.len());
        if from_xi != from_trees || from_trees != from_oracle {
            return Err(format!(
                "count mismatch at {alpha}: series {from_xi}, trees {from_trees}, oracle {from_oracle}"
            ));
        }
    }
    for (counts, expected) in [
        (vec![(2, 2)], 3),
        (vec![(2, 3)], 12),
        (vec![(2, 1), (3, 1)], 8),
    ] {
        let alpha = TypeVector::from_counts(counts);
        if alpha.weight() <= max_weight && count_trees(&alpha) != Int::from(expected) {
            return Err(format!("anchor value mismatch at {alpha}"));
        }
    }
    Ok(format!("all types of weight <= {max_weight}"))
}

fn check_catalan(max_n: usize) -> Outcome {
    let xi = xi_series::<Int>(max_n);
    for n in 1..=max_n {
        let (lhs, rhs) = catalan_check(n, &xi).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("alternating sum {lhs} != catalan {rhs} at n={n}"));
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn check_profiles(max_weight: usize) -> Outcome {
    let (g, alt) = g_series_forms::<Int>(max_weight);
    if g != alt {
        return Err("the two closed forms of the profile series disagree".into());
    }
    if g.swap_uv() != g {
        return Err("profile series is not u/v symmetric".into());
    }
    if g.subst_uv_one() != xi_series::<Int>(max_weight) {
        return Err("profile series does not marginalize to the counting series".into());
    }
    for alpha in all_alphas(max_weight) {
        let from_series = g.profile_slice(&alpha);
        let from_trees = count_by_profile(&alpha);
        if from_series != from_trees {
            return Err(format!("profile table mismatch at {alpha}"));
        }
    }
    Ok(format!("all profiles of weight <= {max_weight}"))
}

fn check_worked_examples() -> Outcome {
    let f = parse_factorization("(3 4)(1 2)(2 4)", 4).map_err(|e| e.to_string())?;
    if !f.evaluate().is_n_cycle() {
        return Err("(3 4)(1 2)(2 4) must multiply to the 4-cycle".into());
    }
    let (_, _, profile) = f.heads_and_tails().map_err(|e| e.to_string())?;
    if profile.total_heads() != 2 || profile.total_tails() != 1 {
        return Err(format!("expected 2 heads and 1 tail, got {profile}"));
    }

    let f2 = parse_factorization("(3 4)(1 2 4)", 4).map_err(|e| e.to_string())?;
    if !f2.evaluate().is_n_cycle() {
        return Err("(3 4)(1 2 4) must multiply to the 4-cycle".into());
    }

    for (text, expected_condition) in [
        ("{(1 4 5),(1 3),(2 4)}", Some(3)),
        ("{(1 4 5),(1 2 3),(3 4)}", Some(4)),
        ("{(1 4 5),(1 2),(2 3)}", None),
    ] {
        let cycles = parse_multiset(text).map_err(|e| e.to_string())?;
        let verdict = match check_arrangeable(&cycles, 5) {
            Ok(()) => None,
            Err(Error::NotArrangeable { condition, .. }) => Some(condition),
            Err(e) => return Err(format!("unexpected error for {text}: {e}")),
        };
        if verdict != expected_condition {
            return Err(format!(
                "verdict for {text}: got {verdict:?}, expected {expected_condition:?}"
            ));
        }
    }

    let cycles = parse_multiset("{(1 5 6 8),(2 3 5),(4 5),(6 7)}").map_err(|e| e.to_string())?;
    let arranged = arrange(&cycles, 8).map_err(|e| e.to_string())?;
    let reference = parse_factorization("(4 5)(2 3 5)(1 5 6 8)(6 7)", 8).map_err(|e| e.to_string())?;
    if !arranged.equivalent(&reference) {
        return Err(format!("arranged to inequivalent {arranged}"));
    }
    Ok("evaluation, profiles, verdicts, arrangement".into())
}

fn check_distinctness(max_weight: usize, cap: usize, cache: &mut OracleCache) -> Outcome {
    for alpha in all_alphas(max_weight) {
        let classes = cache.classes(&alpha, cap)?.to_vec();
        let mut multisets = Vec::with_capacity(classes.len());
        for f in &classes {
            if let Some(c) = f.factors().iter().find(|c| !c.is_increasing()) {
                return Err(format!("non-increasing factor {c} in {f}"));
            }
            let mut ms = f.factors().to_vec();
            ms.sort();
            multisets.push(ms);
        }
        let distinct: std::collections::BTreeSet<_> = multisets.iter().collect();
        if distinct.len() != multisets.len() {
            return Err(format!(
                "two inequivalent classes of type {alpha} share a factor multiset"
            ));
        }
    }
    Ok(format!("all classes of weight <= {max_weight}"))
}

fn check_cactus(
    roundtrip_weight: usize,
    arrange_n: usize,
    cap: usize,
    cache: &mut OracleCache,
) -> Outcome {
    for alpha in all_alphas(roundtrip_weight) {
        for tree in enumerate_trees(&alpha) {
            let cactus = tree_to_cactus(&tree).map_err(|e| format!("at {alpha}: {e}"))?;
            let back = cactus_to_tree(&cactus).map_err(|e| format!("at {alpha}: {e}"))?;
            if back != tree {
                return Err(format!("cactus roundtrip mismatch at {alpha}"));
            }
        }
    }
    let arrange_weight = arrange_n.saturating_sub(1);
    for alpha in all_alphas(arrange_weight) {
        for f in cache.classes(&alpha, cap)?.to_vec() {
            let n = alpha.weight() + 1;
            let rebuilt = arrange(f.factors(), n).map_err(|e| format!("arrange failed for {f}: {e}"))?;
            if rebuilt != f {
                return Err(format!("arrange({f}) produced different class {rebuilt}"));
            }
            if !rebuilt.evaluate().is_n_cycle() {
                return Err(format!("arrange({f}) does not multiply to the n-cycle"));
            }
        }
    }
    Ok(format!(
        "roundtrips to weight {roundtrip_weight}, arrangements to n = {arrange_n}"
    ))
}
