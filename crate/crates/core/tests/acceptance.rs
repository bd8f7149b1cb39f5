//! Acceptance criteria. Each criterion prints one pass/fail line with its
//! running time; the test fails if any criterion fails.

use std::fmt::Display;
use std::time::{Duration, Instant};

use celltree::census::{
    cobases, count_orientations, enumerate_forests, rooted_forest_polynomial_bruteforce,
    tau_bruteforce,
};
use celltree::complex::{ChainComplex, LaplacianKind, SimplicialComplex};
use celltree::critical::{
    critical_group, critical_group_reduced, critical_group_via_cycles, sequence_order_check,
    torsion_free_tree,
};
use celltree::families::named::{rp2_six_vertex_star_root, NAMES};
use celltree::families::*;
use celltree::homology::{characterize_forests, is_z_apc, relative_homology_torsion, torsion};
use celltree::linalg::{binomial, char_poly, det_exact, smith_normal_form, IntMatrix};
use celltree::matrix_forest::{
    default_root, rooted_forest_polynomial, tau_alternating, tau_covolume, tau_lyons,
    tau_lyons_default, tau_lyons_spectral, tau_pseudodet, tau_reduced, tau_reduced_acyclic,
    TauReport,
};
use celltree::sampling::GENERATOR;
use celltree::verify::{run, Status, Suite, VerifyConfig};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn ok<T, E: Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn value(r: celltree::Result<TauReport>, what: &str) -> Result<BigRational, String> {
    ok(r, what).map(|r| r.value)
}

fn simplex(n: u32, d: usize) -> ChainComplex {
    simplex_skeleton(n, d).unwrap().compile()
}

fn graph(n: u32, edges: &[[u32; 2]]) -> ChainComplex {
    let f: Vec<Vec<u32>> = edges.iter().map(|e| e.to_vec()).collect();
    SimplicialComplex::from_facets(n, &f).unwrap().compile()
}

fn reduced(x: &ChainComplex) -> Result<BigRational, String> {
    let root = ok(default_root(x), "root")?;
    value(tau_reduced(x, &root, None), "reduced")
}

/// Unweighted `τ_k`, with `τ_0 = |X_0|`.
fn tau_at(x: &ChainComplex, k: usize) -> Result<BigRational, String> {
    if k == 0 {
        return Ok(int(x.num_cells(0)));
    }
    value(tau_pseudodet(&ok(x.skeleton(k), "skeleton")?, None), "pseudodet")
}

fn criterion_1() -> Outcome {
    for n in 3..=7u32 {
        let x = simplex(n, 1);
        let expected = int(BigInt::from(n).pow(n - 2));
        ensure!(reduced(&x)? == expected, "K_{n} reduced");
        ensure!(value(tau_pseudodet(&x, None), "pseudodet")? == expected, "K_{n} pseudodet");
        ensure!(int(ok(tau_bruteforce(&x, 1), "oracle")?) == expected, "K_{n} oracle");
    }
    for m in 1..=4u32 {
        for n in 1..=4u32 {
            let x = complete_colorful(&[m, n]).unwrap().compile();
            let expected = int(BigInt::from(n).pow(m - 1) * BigInt::from(m).pow(n - 1));
            ensure!(reduced(&x)? == expected, "K_{m},{n} reduced");
            ensure!(value(tau_pseudodet(&x, None), "pseudodet")? == expected, "K_{m},{n} pseudodet");
            ensure!(int(ok(tau_bruteforce(&x, 1), "oracle")?) == expected, "K_{m},{n} oracle");
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let x = named_complex("bipyramid").unwrap();
    let census = ok(enumerate_forests(&x, 2), "census")?;
    ensure!(census.len() == 15, "{} trees", census.len());
    ensure!(census.forests.iter().all(|(_, t)| t.is_one()), "nontrivial torsion");
    let star = ok(x.indices_of(1, &["12", "13", "14", "15"]), "star")?;
    let r = ok(tau_reduced_acyclic(&x, &star, None), "reduced")?;
    let det = &r.determinants[0].1;
    ensure!(*det == int(15) && r.value == int(15), "det {det}, value {}", r.value);
    ensure!(r.corrections.iter().all(|(_, v)| v.is_one()), "corrections {:?}", r.corrections);
    Ok(())
}

fn criterion_3() -> Outcome {
    let cell = named_complex("rp2_cell").unwrap();
    let six = named_complex("rp2_six_vertex").unwrap();
    for (name, x) in [("cell", &cell), ("six-vertex", &six)] {
        ensure!(torsion(x, 1) == BigInt::from(2), "{name}: t_1 = {}", torsion(x, 1));
        ensure!(int(ok(tau_bruteforce(x, 2), "oracle")?) == int(4), "{name}: oracle");
    }
    let pdet = |k: isize| -> Result<BigInt, String> {
        let l = ok(six.laplacian(k, LaplacianKind::UpDown), "laplacian")?;
        Ok(ok(char_poly(&l), "char poly")?.pseudodeterminant())
    };
    let p2 = BigInt::from(3).pow(4) * BigInt::from(4).pow(3);
    ensure!(pdet(1)? == p2, "pdet L_1 = {}", pdet(1)?);
    ensure!(pdet(0)? == BigInt::from(6).pow(5), "pdet L_0 = {}", pdet(0)?);
    ensure!(pdet(-1)? == BigInt::from(6), "pdet L_-1 = {}", pdet(-1)?);
    for (name, x) in [("cell", &cell), ("six-vertex", &six)] {
        let methods = [
            ("alternating", value(tau_alternating(x), "alternating")?),
            ("pseudodet", value(tau_pseudodet(x, None), "pseudodet")?),
            ("reduced", reduced(x)?),
            ("covolume", value(tau_covolume(x, None), "covolume")?),
            ("lyons", value(tau_lyons_default(x), "lyons")?),
            ("lyons-spectral", value(tau_lyons_spectral(x), "lyons-spectral")?),
        ];
        for (m, v) in methods {
            ensure!(v == int(4), "{name} {m}: {v}");
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for (n, d) in [(4u32, 1usize), (5, 1), (4, 2), (5, 2), (6, 2)] {
        let x = simplex(n, d);
        let expected = int(BigInt::from(n).pow(binomial(n as u64 - 2, d as u64).try_into().unwrap()));
        ensure!(int(kalai_count(n, d)) == expected, "closed form ({n},{d})");
        ensure!(reduced(&x)? == expected, "reduced ({n},{d})");
        ensure!(value(tau_pseudodet(&x, None), "pseudodet")? == expected, "pseudodet ({n},{d})");
        ensure!(value(tau_alternating(&x), "alternating")? == expected, "alternating ({n},{d})");
        if (n, d) == (5, 2) || (n, d) == (6, 2) {
            let census = ok(enumerate_forests(&x, d), "census")?;
            ensure!(int(census.tau()) == expected, "oracle ({n},{d})");
            if n == 6 {
                let t2 = census.forests.iter().filter(|(_, t)| *t == BigInt::from(2)).count();
                ensure!(t2 > 0, "no torsion-2 trees in the (6,2) census");
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for n in 3..=7u32 {
        for d in 1..=2usize {
            let x = simplex(n, d);
            let faces = x.simplices(d - 1).unwrap();
            let keep: Vec<usize> = (0..faces.len()).filter(|&i| !faces[i].contains(&1)).collect();
            let l = x.boundary_ref(d).select_rows(&keep).gram_rows();
            let p = ok(char_poly(&l), "char poly")?;
            let ones = binomial(n as u64 - 2, d as u64 - 1).try_into().unwrap();
            let tops = binomial(n as u64 - 2, d as u64).try_into().unwrap();
            let expected = celltree::linalg::CharPoly::from_roots(&[
                (BigInt::one(), ones),
                (BigInt::from(n), tops),
            ]);
            ensure!(p == expected, "n={n} d={d}: {p}");
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for sizes in [vec![2u32, 2, 2], vec![2, 2, 3], vec![3, 3]] {
        let x = complete_colorful(&sizes).unwrap().compile();
        for k in 0..sizes.len() {
            let formula = int(ok(adin_count(k, &sizes), "adin")?);
            ensure!(tau_at(&x, k)? == formula, "{sizes:?} k={k}");
        }
    }
    for m in 1..=4u32 {
        for n in 1..=4u32 {
            let bip = BigInt::from(n).pow(m - 1) * BigInt::from(m).pow(n - 1);
            ensure!(adin_bolker_count(&[m, n]) == bip, "bipartite {m},{n}");
            ensure!(ok(adin_count(1, &[m, n]), "adin")? == bip, "adin {m},{n}");
        }
    }
    for r in 2..=6usize {
        for k in 0..r {
            let ones = vec![1u32; r];
            ensure!(ok(adin_count(k, &ones), "adin")? == kalai_count(r as u32, k), "simplex r={r} k={k}");
            let twos = vec![2u32; r];
            ensure!(ok(adin_count(k, &twos), "adin")? == cross_polytope_count(k, r), "cross r={r} k={k}");
        }
    }
    let oct = complete_colorful(&[2, 2, 2]).unwrap().compile();
    ensure!(ok(tau_bruteforce(&oct.skeleton(1).unwrap(), 1), "oracle")? == BigInt::from(384), "tau_1(K_2,2,2)");
    Ok(())
}

fn criterion_7() -> Outcome {
    let config = VerifyConfig::default();
    let report = run(&[Suite::Families], &config);
    let weighted: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.instance.starts_with("weighted "))
        .collect();
    let required = [
        "weighted simplex 4,1",
        "weighted simplex 5,1",
        "weighted simplex 4,2",
        "weighted simplex 5,2",
        "weighted colorful 2,2,2 k=1",
        "weighted colorful 2,2,2 k=2",
        "weighted ferrers 2,1",
        "weighted ferrers 3,2,1",
        "weighted ferrers 3,3,1",
        "weighted hypercube 2",
        "weighted hypercube 3",
    ];
    for name in required {
        let oracle_rows = weighted
            .iter()
            .filter(|e| e.instance == name && e.method.starts_with("weighted-oracle"))
            .count();
        ensure!(oracle_rows >= config.samples, "{name}: {oracle_rows} oracle rows");
    }
    let shifted = weighted.iter().filter(|e| e.instance.starts_with("weighted shifted")).count();
    let shifted_instances: std::collections::BTreeSet<_> = weighted
        .iter()
        .filter(|e| e.instance.starts_with("weighted shifted"))
        .map(|e| &e.instance)
        .collect();
    ensure!(shifted_instances.len() >= 3 && shifted > 0, "shifted instances {}", shifted_instances.len());
    for e in &weighted {
        ensure!(e.status == Status::Pass, "{} {}: {} vs {}", e.instance, e.method, e.value, e.expected);
    }
    emit(format_args!("    weights: {GENERATOR} seed {}", config.seed));
    Ok(())
}

fn criterion_8() -> Outcome {
    for n in 1..=4usize {
        let q = hypercube_complex(n).unwrap();
        let one = int(hypercube_tau1(n));
        ensure!(value(tau_alternating(&q.skeleton(1).unwrap()), "alternating")? == one, "tau_1(Q_{n})");
        ensure!(int(ok(hypercube_tau(1, n), "formula")?) == one, "formulas disagree n={n}");
        for k in 0..n {
            let p = ok(char_poly(&ok(q.laplacian(k as isize, LaplacianKind::UpDown), "L")?), "char poly")?;
            let mut roots = vec![(BigInt::zero(), 0usize)];
            for j in k + 1..=n {
                let m: usize = (binomial(j as u64 - 1, k as u64) * binomial(n as u64, j as u64)).try_into().unwrap();
                roots.push((BigInt::from(2 * j), m));
            }
            let nonzero: usize = roots.iter().map(|r| r.1).sum();
            roots[0].1 = q.num_cells(k as isize) - nonzero;
            ensure!(p == celltree::linalg::CharPoly::from_roots(&roots), "spectrum n={n} k={k}");
        }
    }
    ensure!(hypercube_tau1(3) == BigInt::from(384), "tau_1(Q_3)");
    for n in [3usize, 4] {
        let q = hypercube_complex(n).unwrap();
        for k in 1..=n {
            let formula = int(ok(hypercube_tau(k, n), "formula")?);
            let alt = value(tau_alternating(&q.skeleton(k).unwrap()), "alternating")?;
            ensure!(alt == formula, "tau_{k}(Q_{n}): {alt} vs {formula}");
        }
    }
    let q3 = hypercube_complex(3).unwrap().skeleton(2).unwrap();
    ensure!(int(ok(tau_bruteforce(&q3, 2), "oracle")?) == int(ok(hypercube_tau(2, 3), "f")?), "oracle Q_3 k=2");
    Ok(())
}

fn criterion_9() -> Outcome {
    let report = run(&[Suite::Duality], &VerifyConfig::default());
    ensure!(report.count(Status::Pass) > 0, "empty duality suite");
    for e in &report.entries {
        ensure!(e.status == Status::Pass, "{} {}: {} vs {}", e.instance, e.method, e.value, e.expected);
    }
    ensure!(report.entries.iter().any(|e| e.instance.ends_with("weighted")), "no weighted instance");
    for n in [3usize, 4] {
        let q = hypercube_complex(n).unwrap().skeleton(n - 1).unwrap();
        let y = complete_colorful(&vec![2; n]).unwrap().compile();
        for k in 0..n {
            ensure!(tau_at(&q, k)? == tau_at(&y, n - 1 - k)?, "n={n} k={k}");
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let cases = [
        ("K4", Matroid::graphic(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()),
        ("C4+chord", Matroid::graphic(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap()),
        ("U2,4", Matroid::uniform(2, 4).unwrap()),
    ];
    for (name, m) in cases {
        let x = ok(m.independence_complex(), "complex")?.compile();
        let oracle = ok(tau_bruteforce(&x, x.dim()), "oracle")?;
        ensure!(m.kook_lee_tau() == oracle, "{name}: {} vs {oracle}", m.kook_lee_tau());
        let t11 = m.tutte().evaluate(&BigInt::one(), &BigInt::one());
        ensure!(t11 == BigInt::from(m.bases().len()), "{name}: T(1,1) = {t11}");
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let cases = [
        ("K3", simplex(3, 1)),
        ("K4", simplex(4, 1)),
        ("C4", graph(4, &[[1, 2], [2, 3], [3, 4], [1, 4]])),
        ("bipyramid", named_complex("bipyramid").unwrap()),
        ("rp2_six_vertex", named_complex("rp2_six_vertex").unwrap()),
    ];
    for (name, x) in &cases {
        let p = ok(rooted_forest_polynomial(x), "char poly")?;
        let brute = ok(rooted_forest_polynomial_bruteforce(x), "brute force")?;
        ensure!(p.coefficients == brute, "{name}: {:?} vs {brute:?}", p.coefficients);
    }
    let x = named_complex("rp2_six_vertex").unwrap();
    let labels = rp2_six_vertex_star_root();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let root = ok(x.indices_of(1, &refs), "root")?;
    let forest: Vec<usize> = (0..x.num_cells(2)).collect();
    let orientations = ok(count_orientations(&x, &forest, &root), "orientations")?;
    ensure!(orientations == BigInt::from(2), "{orientations} orientations");
    let t = ok(relative_homology_torsion(&x, &root), "relative torsion")?;
    ensure!(t == BigInt::from(2), "t(X,R) = {t}");
    let nonrows: Vec<usize> = (0..x.num_cells(1)).filter(|i| !root.contains(i)).collect();
    let det = ok(det_exact(&x.boundary_ref(2).submatrix(&nonrows, &forest)), "det")?;
    ensure!(det.abs() == BigInt::from(2), "|det| = {det}");
    Ok(())
}

fn criterion_12() -> Outcome {
    for name in ["moebius", "annulus"] {
        let x = named_complex(name).unwrap();
        let oracle = int(ok(tau_bruteforce(&x, 2), "oracle")?);
        ensure!(value(tau_lyons_spectral(&x), "spectral")? == oracle, "{name} spectral");
        for s in ok(cobases(&x, 1), "cobases")? {
            ensure!(value(tau_lyons(&x, &s, None), "lyons")? == oracle, "{name} cobase {s:?}");
        }
    }
    let apc = [
        named_complex("bipyramid").unwrap(),
        simplex(5, 2),
        simplex(4, 1),
        complete_colorful(&[2, 2, 2]).unwrap().compile(),
        hypercube_complex(3).unwrap().skeleton(2).unwrap(),
    ];
    for x in &apc {
        ensure!(is_z_apc(x), "instance is not Z-APC");
        let r = reduced(x)?;
        ensure!(value(tau_lyons_default(x), "lyons")? == r, "lyons vs reduced");
        ensure!(value(tau_lyons_spectral(x), "spectral")? == r, "spectral vs reduced");
        let pd = ok(tau_pseudodet(x, None), "pseudodet")?;
        ensure!(pd.value == r, "pseudodet vs reduced");
    }
    Ok(())
}

fn criterion_13() -> Outcome {
    let report = run(&[Suite::Critical], &VerifyConfig::default());
    for e in &report.entries {
        ensure!(
            matches!(e.status, Status::Pass | Status::Info | Status::NotApplicable),
            "{} {}: {} vs {} ({})",
            e.instance,
            e.method,
            e.value,
            e.expected,
            e.note
        );
    }
    let k3 = simplex(3, 1);
    let g = ok(critical_group(&k3, 0), "K_0")?;
    ensure!(g.to_string() == "Z/3", "K_0(K_3) = {g}");
    for (n, d) in [(4u32, 1usize), (5, 2), (4, 2)] {
        let x = simplex(n, d);
        for i in 0..d {
            let k = ok(critical_group(&x, i), "K")?;
            ensure!(ok(critical_group_via_cycles(&x, i), "cycles")?.torsion_part() == k, "cycles ({n},{d}) i={i}");
            if let Some(tree) = ok(torsion_free_tree(&x, i), "tree")? {
                ensure!(ok(critical_group_reduced(&x, i, &tree), "reduced")?.torsion_part() == k, "reduced");
            }
            ensure!(k.order() == Some(ok(tau_bruteforce(&x, i + 1), "oracle")?), "order ({n},{d}) i={i}");
        }
    }
    let b = ok(sequence_order_check(&named_complex("bipyramid").unwrap()), "bipyramid")?;
    ensure!(b.holds() && b.all_equal() && b.error_term.is_one(), "bipyramid {b:?}");
    ensure!(b.critical == BigInt::from(15) && b.quotient == BigInt::from(15), "bipyramid orders {b:?}");
    let r = ok(sequence_order_check(&named_complex("rp2_six_vertex").unwrap()), "rp2")?;
    ensure!(r.holds() && r.error_term == BigInt::from(2), "rp2 {r:?}");
    Ok(())
}

fn property_instances() -> Vec<(String, ChainComplex)> {
    let mut out: Vec<(String, ChainComplex)> =
        NAMES.iter().map(|n| (n.to_string(), named_complex(n).unwrap())).collect();
    for (n, d) in [(3u32, 1usize), (4, 1), (5, 1), (4, 2), (5, 2), (6, 2), (5, 3)] {
        out.push((format!("simplex {n},{d}"), simplex(n, d)));
    }
    for sizes in [vec![3u32, 3], vec![2, 2, 2], vec![2, 2, 3]] {
        out.push((format!("colorful {sizes:?}"), complete_colorful(&sizes).unwrap().compile()));
    }
    for n in 2..=3usize {
        let q = hypercube_complex(n).unwrap();
        for k in 1..=n {
            out.push((format!("hypercube {n} k={k}"), q.skeleton(k).unwrap()));
        }
    }
    out.push(("shifted".into(), shifted_complex(&[vec![2, 3, 6], vec![1, 4, 5]]).unwrap().compile()));
    out.push(("ferrers".into(), ferrers_graph(&Partition::new(vec![3, 2, 1]).unwrap()).unwrap().compile()));
    out.push((
        "coprime".into(),
        ChainComplex::new(
            vec![vec!["v".into()], vec!["e".into()], vec!["f".into(), "g".into()]],
            vec![IntMatrix::from_i64_rows(&[[0]]), IntMatrix::from_i64_rows(&[[2, 3]])],
        )
        .unwrap(),
    ));
    out
}

fn criterion_14() -> Outcome {
    let instances = property_instances();
    for (name, x) in &instances {
        let d = x.dim();
        for k in 0..d {
            let prod = ok(ok(x.boundary(k), "boundary")?.checked_mul(x.boundary_ref(k + 1)), "product")?;
            ensure!(prod.is_zero(), "{name}: boundary composition at {k}");
        }
        if x.num_cells(d as isize) <= 20 {
            let c = ok(characterize_forests(x), "characterize")?;
            ensure!(c.iter().all(|v| *v == c[0]), "{name}: characterizations differ");
        }
        for k in 0..d {
            let up = ok(char_poly(&ok(x.laplacian(k as isize, LaplacianKind::UpDown), "L")?), "p")?;
            let down = ok(char_poly(&ok(x.laplacian(k as isize + 1, LaplacianKind::DownUp), "L")?), "p")?;
            ensure!(up.strip_zero_roots() == down.strip_zero_roots(), "{name}: spectra at {k}");
        }
        let tx = torsion(x, d as isize - 1);
        let census = ok(enumerate_forests(x, d), "census")?;
        for (f, t) in &census.forests {
            ensure!((t % &tx).is_zero(), "{name}: t(X) = {tx} does not divide t(T) = {t} for {f:?}");
        }
    }
    let coprime = &instances.last().unwrap().1;
    ensure!(torsion(coprime, 1).is_one(), "coprime complex has torsion");
    let census = ok(enumerate_forests(coprime, 2), "census")?;
    ensure!(census.forests.iter().all(|(_, t)| !t.is_one()), "coprime complex has a Z-acyclic tree");

    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let rows = rng.random_range(1..=6usize);
        let cols = rng.random_range(1..=6usize);
        let m = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.random_range(-9i64..=9)));
        let snf = smith_normal_form(&m);
        let lhs = ok(ok(snf.left.checked_mul(&m), "mul")?.checked_mul(&snf.right), "mul")?;
        ensure!(lhs == snf.diagonal(), "reconstruction failed for {m:?}");
        ensure!(ok(det_exact(&snf.left), "det")?.abs().is_one(), "left not unimodular");
        ensure!(ok(det_exact(&snf.right), "det")?.abs().is_one(), "right not unimodular");
        let f = &snf.invariant_factors;
        ensure!(f.windows(2).all(|w| (&w[1] % &w[0]).is_zero()), "divisibility {f:?}");
    }
    Ok(())
}

/// Written straight to stdout so the lines show without `--nocapture`.
fn emit(line: std::fmt::Arguments) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").expect("stdout");
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("Cayley and bipartite counts", criterion_1),
        ("bipyramid trees", criterion_2),
        ("projective planes", criterion_3),
        ("simplex skeletons", criterion_4),
        ("reduced simplex spectrum", criterion_5),
        ("colorful complexes", criterion_6),
        ("weighted identities", criterion_7),
        ("hypercubes", criterion_8),
        ("duality", criterion_9),
        ("matroid complexes", criterion_10),
        ("rooted forests", criterion_11),
        ("non-acyclic complexes", criterion_12),
        ("critical groups", criterion_13),
        ("property suite", criterion_14),
    ];
    let mut failed = Vec::new();
    let mut total = Duration::ZERO;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        total += elapsed;
        match &outcome {
            Ok(()) => emit(format_args!("criterion {:>2} PASS {name} ({elapsed:.2?})", i + 1)),
            Err(e) => {
                emit(format_args!("criterion {:>2} FAIL {name} ({elapsed:.2?}): {e}", i + 1));
                failed.push(i + 1);
            }
        }
    }
    emit(format_args!("total {total:.2?}"));
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
