//! The acceptance sweep: one test per criterion, each printing a single
//! PASS or FAIL line (visible under --nocapture). Bounds, budgets, and
//! tolerances are pinned in code next to the checks they govern; every
//! comparison is exact.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use auterlab_core::{
    classify, compare_heights, degree_excess, enumerate_graphs, reduced_homology,
    smith_normal_form, up_link_model, verify_lemma, HeightVector, HomotopyClass, RunConfig,
    Verdict, VerificationReport,
};

fn conclude(criterion: &str, pass: bool, detail: String) {
    println!("criterion {criterion}: {} - {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion}: {detail}");
}

fn failures(rows: &[VerificationReport]) -> Vec<String> {
    rows.iter()
        .filter(|r| r.failed())
        .map(|r| format!("{} [{}]", r.instance, r.computed))
        .collect()
}

/// Every rank-2 and rank-3 graph on at most five vertices, every nonempty
/// forest: the height comparison is never a tie and always agrees with the
/// descending-forest predicate. Budget: two minutes.
#[test]
fn criterion_1_forest_height_lemma() {
    let t0 = Instant::now();
    let cfg = RunConfig { rank: 3, max_vertices: 5, ..RunConfig::default() };
    let rows = verify_lemma("forest-height", &cfg).expect("registered lemma");
    let bad = failures(&rows);
    let elapsed = t0.elapsed();
    conclude(
        "1",
        !rows.is_empty() && bad.is_empty() && elapsed < Duration::from_secs(120),
        format!("{} graphs, all forest signs match, {elapsed:?} {bad:?}", rows.len()),
    );
}

/// Same family, every blow-up within the default enumeration caps: the
/// height comparison is never a tie and always agrees with the separation
/// predicate. Budget: ten minutes.
#[test]
fn criterion_2_blow_up_height_lemma() {
    let t0 = Instant::now();
    let cfg = RunConfig { rank: 3, max_vertices: 5, ..RunConfig::default() };
    let rows = verify_lemma("blowup-height", &cfg).expect("registered lemma");
    let bad = failures(&rows);
    let elapsed = t0.elapsed();
    conclude(
        "2",
        !rows.is_empty() && bad.is_empty() && elapsed < Duration::from_secs(600),
        format!("{} graphs, all blow-up signs match, {elapsed:?} {bad:?}", rows.len()),
    );
}

/// Every filtration stage with 4 <= n <= 6: reduced homology torsion-free
/// and concentrated in degree n - 4. Budget: five minutes.
#[test]
fn criterion_3_sigma_sphericity() {
    let t0 = Instant::now();
    let cfg = RunConfig { sigma_max_n: 6, ..RunConfig::default() };
    let rows = verify_lemma("sigma-spherical", &cfg).expect("registered lemma");
    let bad = failures(&rows);
    let elapsed = t0.elapsed();
    conclude(
        "3",
        !rows.is_empty() && bad.is_empty() && elapsed < Duration::from_secs(300),
        format!("{} stages, all (n-4)-spherical, {elapsed:?} {bad:?}", rows.len()),
    );
}

/// Stretch bound for criterion 3: the same sweep including n = 7.
#[test]
#[ignore = "stretch bound; run explicitly with --ignored"]
fn criterion_3_sigma_sphericity_stretch_seven() {
    let cfg = RunConfig { sigma_max_n: 7, ..RunConfig::default() };
    let rows = verify_lemma("sigma-spherical", &cfg).expect("registered lemma");
    let bad = failures(&rows);
    conclude(
        "3 (stretch)",
        !rows.is_empty() && bad.is_empty(),
        format!("{} stages including n=7 {bad:?}", rows.len()),
    );
}

/// The base of the filtration for n <= 7: f-vector equal to the
/// barycentrically divided boundary of the (n-3)-simplex and the homology
/// of an (n-4)-sphere.
#[test]
fn criterion_4_sigma_base_case() {
    let rows = verify_lemma("sigma-base", &RunConfig::default()).expect("registered lemma");
    let bad = failures(&rows);
    let covers_seven = rows.iter().any(|r| r.instance.contains("n=7"));
    conclude(
        "4",
        rows.len() == 4 && covers_seven && bad.is_empty(),
        format!("n=4..7 f-vectors and homology match {bad:?}"),
    );
}

/// Down-link dichotomy over the whole family: wedge of (V-2)-spheres or
/// acyclic, never anything else; unique-descent instances acyclic, with
/// collapse certificates where the greedy collapse succeeds.
#[test]
fn criterion_5_down_link_dichotomy() {
    let cfg = RunConfig { rank: 3, max_vertices: 5, ..RunConfig::default() };
    let dichotomy = verify_lemma("downlink-dichotomy", &cfg).expect("registered lemma");
    let unique = verify_lemma("downlink-unique", &cfg).expect("registered lemma");
    let bad: Vec<String> =
        failures(&dichotomy).into_iter().chain(failures(&unique)).collect();
    let certified = unique.iter().filter(|r| r.verdict == Verdict::PassStrong).count();
    conclude(
        "5",
        !dichotomy.is_empty() && !unique.is_empty() && bad.is_empty(),
        format!(
            "{} graphs in the dichotomy, {} unique-descent instances acyclic \
             ({certified} with collapse certificates) {bad:?}",
            dichotomy.len(),
            unique.len()
        ),
    );
}

/// Rank-2 graphs on at most three vertices: the order complex of the
/// blow-up sub-poset has the homology of the join model, and for graphs
/// without unique descending edges the model classifies as a wedge in
/// dimension (degree excess - vertex count).
#[test]
fn criterion_6_up_link_equivalence() {
    let cfg = RunConfig { rank: 2, max_vertices: 3, ..RunConfig::default() };
    let rows = verify_lemma("uplink-poset", &cfg).expect("registered lemma");
    let strict: Vec<&VerificationReport> =
        rows.iter().filter(|r| r.instance.ends_with("check=strict-matches-model")).collect();
    let all_match = !strict.is_empty() && strict.iter().all(|r| r.verdict == Verdict::Pass);

    let mut classified = 0usize;
    let mut misclassified = Vec::new();
    for g in enumerate_graphs(2, 3, 1, 6).expect("bounds are modest") {
        if !g.unique_descending_edge_vertices().is_empty() {
            continue;
        }
        let target = degree_excess(&g) - g.vertex_count() as i64;
        let class = classify(&reduced_homology(&up_link_model(&g)));
        let ok = match class {
            HomotopyClass::Wedge { dim, .. } => dim as i64 == target,
            HomotopyClass::Void => target == -1,
            _ => false,
        };
        classified += 1;
        if !ok {
            misclassified.push(format!("{:?} got {class:?}", g.canonical_edge_list()));
        }
    }
    conclude(
        "6",
        all_match && classified > 0 && misclassified.is_empty(),
        format!(
            "{} sub-posets match the model, {classified} model classifications at \
             dimension (excess - vertices) {misclassified:?}",
            strict.len()
        ),
    );
}

/// The full pipeline over the whole family: every descending link is a
/// wedge of (excess - 1)-spheres or acyclic.
#[test]
fn criterion_7_descending_link_corollary() {
    let cfg = RunConfig { rank: 3, max_vertices: 5, ..RunConfig::default() };
    let rows = verify_lemma("descending-link", &cfg).expect("registered lemma");
    let bad = failures(&rows);
    conclude(
        "7",
        !rows.is_empty() && bad.is_empty(),
        format!("{} descending links classified {bad:?}", rows.len()),
    );
}

/// One pass of textbook row/column reduction, restarting the pivot search
/// whenever a division leaves a remainder. The restart keeps every new
/// pivot strictly smaller, which is what makes this safe to run at full
/// scale; it shares no code with the production Smith normal form.
fn naive_snf(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut factors = Vec::new();
    let mut t = 0;
    'step: while t < rows.min(cols) {
        'select: loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero()
                        && pivot
                            .is_none_or(|(pi, pj): (usize, usize)| m[i][j].abs() < m[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'step };
            m.swap(t, pi);
            if t != pj {
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
            }
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = &m[i][t] / &m[t][t];
                for j in t..cols {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
                if !m[i][t].is_zero() {
                    continue 'select;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = &m[t][j] / &m[t][t];
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    continue 'select;
                }
            }
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        for j2 in t..cols {
                            let add = m[i][j2].clone();
                            m[t][j2] += add;
                        }
                        continue 'select;
                    }
                }
            }
            break 'select;
        }
        factors.push(m[t][t].abs());
        t += 1;
    }
    factors
}

/// The engine oracle rows (divisor-based Smith normal form cross-check,
/// join profiles of random wedges, Euler consistency) all pass, and the
/// production Smith normal form also agrees with a naive row/column
/// reduction on 200 random matrices of size up to 8x8 with entries up
/// to 10 in magnitude.
#[test]
fn criterion_8_engine_oracles() {
    let rows = verify_lemma("engine-oracles", &RunConfig::default()).expect("registered lemma");
    let bad = failures(&rows);

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut naive_disagreements = 0usize;
    for _ in 0..200 {
        let r = rng.gen_range(1..=8usize);
        let c = rng.gen_range(1..=8usize);
        let mut dense = vec![vec![0i64; c]; r];
        let mut entries = Vec::with_capacity(r * c);
        for (i, row) in dense.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = rng.gen_range(-10i64..=10);
                entries.push((i, j, *cell));
            }
        }
        let fast = smith_normal_form(r, c, &entries);
        let naive = naive_snf(
            dense.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        );
        if fast.factors != naive || fast.rank != naive.len() {
            naive_disagreements += 1;
        }
    }
    conclude(
        "8",
        rows.len() == 3 && bad.is_empty() && naive_disagreements == 0,
        format!(
            "oracle rows pass, naive reduction agrees on 200/200 matrices \
             ({naive_disagreements} disagreements) {bad:?}"
        ),
    );
}

/// The worked lexicographic comparison: with a common tail, (2,-5,4)
/// exceeds (1,-3,6), which exceeds (1,-3,3).
#[test]
fn criterion_9_lexicographic_height_example() {
    let a = HeightVector::new(vec![2, -5, 4], (0, 10));
    let b = HeightVector::new(vec![1, -3, 6], (0, 10));
    let c = HeightVector::new(vec![1, -3, 3], (0, 10));
    let chain = compare_heights(&a, &b) == std::cmp::Ordering::Greater
        && compare_heights(&b, &c) == std::cmp::Ordering::Greater
        && compare_heights(&a, &c) == std::cmp::Ordering::Greater;
    conclude("9", chain, "(2, -5, 4) > (1, -3, 6) > (1, -3, 3)".to_string());
}
