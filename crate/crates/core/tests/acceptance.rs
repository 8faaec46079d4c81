//! Acceptance run: prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use quandles::constructors::{adtak, takasaki, trivial, AbelianGroupSpec};
use quandles::enumerate::enumerate_quandles;
use quandles::inner::{is_connected, orbit_closure, subquotient_witness};
use quandles::lattice::{
    check_nested_strong_complement, classify_strong_complement, enumerate_subquandles,
    explicit_chain_complement, is_strongly_complemented, maximal_intersection,
};
use quandles::limits::{
    direct_tower_growth, factorial_tower, reduction_tower, truncated_inverse_limit,
    BoundedIntegerDihedral,
};
use quandles::mesh::{extract_mesh, semidisjoint_union, validate_mesh};
use quandles::{validate_table, ElementSet, FiniteQuandle};

type Verdict = Result<String, String>;

fn corpus() -> Vec<FiniteQuandle> {
    quandles::corpus(5).expect("corpus enumeration")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() < limit, || {
        format!("took {:?}, limit {limit:?}", start.elapsed())
    })
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let expected = [1, 1, 3, 7];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_quandles(n).map_err(|e| e.to_string())?.len();
        let oracle = raw_quandle_count(n);
        ensure(got == want && oracle == want, || {
            format!("n={n}: library {got}, oracle {oracle}, expected {want}")
        })?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "counts 1, 1, 3, 7 agree with raw search in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_2(corpus: &[FiniteQuandle]) -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    for q in corpus {
        let t = table_of(q);
        let lattice = enumerate_subquandles(q).map_err(|e| e.to_string())?;
        let oracle = powerset_subquandles(&t);
        let mut lib: Vec<u64> = lattice.elements().iter().map(mask_of).collect();
        lib.sort_unstable();
        ensure(lib == oracle, || {
            format!(
                "lattice of order-{} quandle differs from powerset",
                q.size()
            )
        })?;
        for s in lattice.elements() {
            let c = lattice
                .complement_search(s)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("{} has no complement in {:?}", s.one_based(), t))?;
            let (sm, cm) = (mask_of(s), mask_of(&c));
            ensure(
                sm & cm == 0 && closure(&t, sm | cm) == full_mask(q.size()),
                || format!("{} is not a complement of {}", c.one_based(), s.one_based()),
            )?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{checked} subquandles across {} quandles complemented in {:.2?}",
        corpus.len(),
        start.elapsed()
    ))
}

fn criterion_3(corpus: &[FiniteQuandle]) -> Verdict {
    let mut pairs = 0;
    let mut strong = 0;
    for q in corpus {
        let t = table_of(q);
        for mask in powerset_subquandles(&t) {
            let s = ElementSet::from_members(q.size(), members(mask, q.size()));
            let r =
                classify_strong_complement(q, &s).map_err(|e| format!("{}: {e}", s.one_based()))?;
            let c = r.conditions();
            ensure(r.agreement && c.iter().all(|&b| b == c[0]), || {
                format!("{c:?} for {}", s.one_based())
            })?;
            // Independent check of condition (2): union of orbits.
            let union_of_orbits = members(mask, q.size())
                .iter()
                .all(|&x| orbit(&t, x) & !mask == 0);
            ensure(union_of_orbits == c[0], || {
                format!("orbit oracle disagrees on {}", s.one_based())
            })?;
            pairs += 1;
            strong += c[0] as usize;
        }
    }
    Ok(format!(
        "{pairs} pairs, {strong} strongly complemented, zero disagreements"
    ))
}

fn criterion_4(corpus: &[FiniteQuandle]) -> Verdict {
    let mut count = 0;
    for q in corpus.iter().filter(|q| !is_connected(q)) {
        let m = extract_mesh(q, None).map_err(|e| e.to_string())?;
        let report = validate_mesh(&m);
        ensure(report.is_ok(), || {
            format!("mesh of {:?} invalid:\n{report}", table_of(q))
        })?;
        let rebuilt = semidisjoint_union(&m).map_err(|e| e.to_string())?;
        ensure(table_of(&rebuilt) == table_of(q), || {
            format!("round trip changed {:?}", table_of(q))
        })?;
        count += 1;
    }
    Ok(format!(
        "{count} non-connected quandles rebuilt table-exactly from valid meshes"
    ))
}

fn criterion_5(corpus: &[FiniteQuandle]) -> Verdict {
    let mut pairs = 0;
    for q in corpus {
        let t = table_of(q);
        let n = q.size();
        for mask in powerset_subquandles(&t).into_iter().filter(|&m| m != 0) {
            let ms = members(mask, n);
            let s = ElementSet::from_members(n, ms.iter().copied());
            let w = subquotient_witness(q, &s).map_err(|e| format!("{}: {e}", s.one_based()))?;
            // Oracle: S_{Q'} from raw columns, kernel = elements fixing Q' pointwise,
            // Inn(Q') from the induced table.
            let gens: Vec<Vec<usize>> = ms
                .iter()
                .map(|&y| (0..n).map(|x| t[x][y]).collect())
                .collect();
            let group = generated_group(n, &gens);
            let kernel = group
                .iter()
                .filter(|g| ms.iter().all(|&x| g[x] == x))
                .count();
            let local: Vec<Vec<usize>> = ms
                .iter()
                .map(|&y| {
                    ms.iter()
                        .map(|&x| ms.iter().position(|&m| m == t[x][y]).unwrap())
                        .collect()
                })
                .collect();
            let inn_sub = generated_group(ms.len(), &local).len();
            ensure(group.len() == kernel * inn_sub, || {
                format!(
                    "{}: |S|={} |K|={kernel} |Inn|={inn_sub}",
                    s.one_based(),
                    group.len()
                )
            })?;
            ensure(
                w.subgroup.order() == group.len()
                    && w.kernel.order() == kernel
                    && w.induced_inn.order() == inn_sub,
                || format!("{}: witness orders differ from oracle", s.one_based()),
            )?;
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} nonempty pairs satisfy |S| = |K|·|Inn(Q')|"
    ))
}

fn criterion_6(corpus: &[FiniteQuandle]) -> Verdict {
    let mut nested = 0;
    let mut explicit = 0;
    for q in corpus {
        let subs = enumerate_subquandles(q).map_err(|e| e.to_string())?;
        for outer in subs.elements() {
            for inner in subs.elements().iter().filter(|s| s.is_subset(outer)) {
                if is_strongly_complemented(q, inner) {
                    let ok = check_nested_strong_complement(q, outer, inner)
                        .map_err(|e| e.to_string())?;
                    ensure(ok, || "nested check returned false".into())?;
                    nested += 1;
                }
                if !is_strongly_complemented(q, outer) || outer.is_empty() {
                    continue;
                }
                let (sub, ms) = q.induced(outer).map_err(|e| e.to_string())?;
                let local = ElementSet::from_members(
                    ms.len(),
                    (0..ms.len()).filter(|&i| inner.contains(ms[i])),
                );
                if !is_strongly_complemented(&sub, &local) {
                    continue;
                }
                let c = explicit_chain_complement(q, outer, inner).map_err(|e| e.to_string())?;
                let t = table_of(q);
                let (im, cm) = (mask_of(inner), mask_of(&c.complement));
                ensure(
                    im & cm == 0 && closure(&t, im | cm) == full_mask(q.size()),
                    || {
                        format!(
                            "{} fails meet/join for {}",
                            c.complement.one_based(),
                            inner.one_based()
                        )
                    },
                )?;
                ensure(orbit_closure(q, inner).is_subset(outer), || {
                    "orbit closure escapes Q'".into()
                })?;
                explicit += 1;
            }
        }
    }
    let tak8 = takasaki(&AbelianGroupSpec::cyclic(8)).map_err(|e| e.to_string())?;
    let c = explicit_chain_complement(
        &tak8,
        &ElementSet::from_members(8, [0, 2, 4, 6]),
        &ElementSet::from_members(8, [0, 4]),
    )
    .map_err(|e| e.to_string())?;
    ensure(c.complement.to_vec() == vec![1, 3, 5, 7], || {
        format!("Tak(Z8) gave {}", c.complement)
    })?;
    Ok(format!(
        "{nested} nested and {explicit} explicit chains verified; Tak(Z8) complement {{1,3,5,7}}"
    ))
}

fn criterion_7() -> Verdict {
    let tak3 = takasaki(&AbelianGroupSpec::cyclic(3)).map_err(|e| e.to_string())?;
    let got = adtak(&tak3).map_err(|e| e.to_string())?;
    let oracle = oracle_adtak_factors(&table_of(&tak3));
    ensure(got.factors() == [3, 0] && oracle == [3, 0], || {
        format!("Tak(Z3): {got}, oracle {oracle:?}")
    })?;
    for n in 1..=6 {
        let q = trivial(n).map_err(|e| e.to_string())?;
        let got = adtak(&q).map_err(|e| e.to_string())?;
        let mut want = vec![2u64; n - 1];
        want.push(0);
        let oracle = oracle_adtak_factors(&trivial_table(n));
        ensure(got.factors() == want.as_slice() && oracle == want, || {
            format!("trivial({n}): {got}, oracle {oracle:?}")
        })?;
    }
    Ok("AdTak(Tak(Z3)) = Z ⊕ Z3 and AdTak(trivial(n)) = Z ⊕ Z2^(n-1) for n ≤ 6, matched by the second reduction".into())
}

fn criterion_8(corpus: &[FiniteQuandle]) -> Verdict {
    let mut count = 0;
    for q in corpus.iter().filter(|q| q.size() >= 2) {
        let l = enumerate_subquandles(q).map_err(|e| e.to_string())?;
        let meet = maximal_intersection(&l);
        let oracle = maximal_masks(&table_of(q))
            .into_iter()
            .fold(full_mask(q.size()), |a, m| a & m);
        ensure(meet.is_empty() && oracle == 0, || {
            format!("{:?}: intersection {}", table_of(q), meet)
        })?;
        count += 1;
    }
    Ok(format!(
        "maximal subquandles meet in ∅ for all {count} quandles of order ≥ 2"
    ))
}

fn criterion_9() -> Verdict {
    let tower = reduction_tower(&[2, 4, 8]).map_err(|e| e.to_string())?;
    let limit = truncated_inverse_limit(&tower, 3).map_err(|e| e.to_string())?;
    ensure(limit.quandle.size() == 8, || {
        format!("order {}", limit.quandle.size())
    })?;
    let revalidated = validate_table(&limit.quandle.rows()).map_err(|e| e.to_string())?;
    ensure(revalidated.is_quandle(), || {
        "limit is not idempotent".into()
    })?;
    ensure(
        brute_isomorphic(&table_of(&limit.quandle), &tak_table(8)),
        || "limit not isomorphic to Tak(Z8)".into(),
    )?;

    let levels = 5;
    let full = factorial_tower(levels).map_err(|e| e.to_string())?;
    let mut sizes = Vec::new();
    for k in 1..=levels {
        let prefix = full.prefix(k).map_err(|e| e.to_string())?;
        let n = prefix.top().size();
        let seed = ElementSet::from_members(n, [0, 1 % n]);
        let r = direct_tower_growth(&prefix, &seed, 100).map_err(|e| e.to_string())?;
        ensure(r.saturated() && r.final_size() == n, || {
            format!("level {k} (order {n}): {r}")
        })?;
        sizes.push(r.final_size());
    }
    let surrogate = BoundedIntegerDihedral::new(50)
        .unwrap()
        .growth(&[0, 1], 100)
        .map_err(|e| e.to_string())?;
    ensure(
        !surrogate.saturated() && !surrogate.frontier.is_empty(),
        || format!("surrogate: {surrogate}"),
    )?;
    Ok(format!(
        "limit of order 8 ≅ Tak(Z8); factorial tower saturates at sizes {sizes:?}; bounded surrogate unsaturated with {} frontier elements",
        surrogate.frontier.len()
    ))
}

fn main() {
    let corpus = corpus();
    let results: Vec<(usize, Verdict)> = vec![
        (1, criterion_1()),
        (2, criterion_2(&corpus)),
        (3, criterion_3(&corpus)),
        (4, criterion_4(&corpus)),
        (5, criterion_5(&corpus)),
        (6, criterion_6(&corpus)),
        (7, criterion_7()),
        (8, criterion_8(&corpus)),
        (9, criterion_9()),
    ];
    let mut failed = 0;
    for (i, r) in &results {
        match r {
            Ok(detail) => println!("criterion {i}: PASS  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {i}: FAIL  {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
