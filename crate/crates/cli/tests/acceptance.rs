//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use hypergirth::format::parse_hypergraph;
use hypergirth::geometry::{
    greedy_high_girth_bipartite, projective_plane, split_cayley_hexagon, symplectic_quadrangle,
    GreedyParams,
};
use hypergirth::planner::{
    certificate, check_hexagon_assumptions, check_sandwich_hexagon, check_sandwich_octagon,
    hexagon_params, octagon_params, plan_parameters_hexagon, plan_parameters_octagon, q_exponent,
    q_exponent_recursive, q_prime_exponent, q_prime_exponent_recursive, q_sequence, theorem_bound,
    Status,
};
use hypergirth::transform::{neighborhood_hypergraph, substitute_edges, SubstitutionPlan};
use hypergirth::{
    girth_bipartite, girth_hypergraph, girth_oracle, BipartiteGraph, Girth, Hypergraph, VertexId,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use sha2::{Digest, Sha256};

const BIN: &str = env!("CARGO_BIN_EXE_hypergirth");

// Pinned budgets and tolerances.
const SMALL_GEOMETRIES_SECS: u64 = 10;
const HEXAGON_3_SECS: u64 = 120;
const CERTIFICATE_SECS: u64 = 30;
const PIPELINE_SECS: u64 = 60;
const MIN_GREEDY_INSTANCES: usize = 100;
const MIN_SUBSTITUTION_TRIALS: usize = 200;
const ORACLE_INCIDENCE_LIMIT: usize = 2000;
/// Twelve significant digits.
const THEOREM_REL_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, secs: u64, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < Duration::from_secs(secs), || format!("{what} took {t:.1?}, budget {secs} s"))?;
    Ok(t)
}

// 1 ------------------------------------------------------------------------

fn fingerprint(g: &BipartiteGraph, side: usize, deg: usize, girth: u32, name: &str) -> Result<(), String> {
    ensure(g.n_left() == side && g.n_right() == side, || {
        format!("{name}: {}+{} vertices, expected {side}+{side}", g.n_left(), g.n_right())
    })?;
    ensure(g.biregularity() == Some((deg, deg)), || format!("{name}: not ({deg},{deg})-biregular"))?;
    let found = girth_bipartite(g).girth;
    ensure(found == Girth::Finite(girth), || format!("{name}: girth {found}, expected {girth}"))
}

fn geometry_fingerprints() -> Outcome {
    let start = Instant::now();
    fingerprint(&projective_plane(2).unwrap(), 7, 3, 6, "PG(2,2)")?;
    fingerprint(&symplectic_quadrangle(2).unwrap(), 15, 3, 8, "W(2)")?;
    fingerprint(&split_cayley_hexagon(2).unwrap(), 63, 3, 12, "H(2)")?;
    let small = within(start, SMALL_GEOMETRIES_SECS, "q = 2 geometries")?;
    let start = Instant::now();
    fingerprint(&split_cayley_hexagon(3).unwrap(), 364, 4, 12, "H(3)")?;
    let big = within(start, HEXAGON_3_SECS, "H(3)")?;
    Ok(format!("PG(2,2) W(2) H(2) in {small:.1?}, H(3) 364+364 in {big:.1?}"))
}

// 2 ------------------------------------------------------------------------

/// Right vertices of degree < 2 lie on no cycle and may repeat a
/// one-element neighborhood, so they are dropped before taking H1.
fn cyclic_core(g: &BipartiteGraph) -> BipartiteGraph {
    let mut index = vec![None; g.n_right()];
    let mut next = 0;
    for (v, d) in g.right_degrees().into_iter().enumerate() {
        if d >= 2 {
            index[v] = Some(next);
            next += 1;
        }
    }
    let inc = g
        .incidences()
        .iter()
        .filter_map(|&(u, v)| index[v as usize].map(|w| (u, w as VertexId)))
        .collect();
    BipartiteGraph::new(g.n_left(), next, inc).unwrap()
}

fn doubled(g: Girth) -> Girth {
    match g {
        Girth::Finite(k) => Girth::Finite(2 * k),
        other => other,
    }
}

fn halving(g: &BipartiteGraph, name: &str) -> Result<(), String> {
    let h = neighborhood_hypergraph(&cyclic_core(g)).map_err(|e| format!("{name}: {e}"))?;
    let (bip, hyp) = (girth_bipartite(g).girth, girth_hypergraph(&h).girth);
    ensure(bip == doubled(hyp), || format!("{name}: graph girth {bip}, hypergraph girth {hyp}"))
}

fn greedy(left: usize, right: usize, deg: usize, girth: u32, seed: u64) -> BipartiteGraph {
    greedy_high_girth_bipartite(GreedyParams {
        n_left: left,
        n_right: right,
        right_degree: deg,
        target_girth: girth,
        seed,
    })
    .unwrap()
    .0
}

fn halving_identity() -> Outcome {
    halving(&projective_plane(2).unwrap(), "PG(2,2)")?;
    halving(&symplectic_quadrangle(2).unwrap(), "W(2)")?;
    halving(&split_cayley_hexagon(2).unwrap(), "H(2)")?;
    halving(&split_cayley_hexagon(3).unwrap(), "H(3)")?;
    let mut by_target: BTreeMap<u32, usize> = BTreeMap::new();
    for seed in 1..=100u64 {
        let target = 6 + 2 * ((seed - 1) % 6) as u32;
        let g = greedy(40, 24, 4, target, seed);
        ensure(girth_bipartite(&g).girth.at_least(target), || {
            format!("greedy seed {seed} missed girth {target}")
        })?;
        halving(&g, &format!("greedy seed {seed} target {target}"))?;
        *by_target.entry(target).or_default() += 1;
    }
    let total: usize = by_target.values().sum();
    ensure(total >= MIN_GREEDY_INSTANCES, || format!("only {total} greedy instances"))?;
    Ok(format!("4 geometries and {total} greedy instances, targets {:?}", by_target.keys().collect::<Vec<_>>()))
}

// 3 ------------------------------------------------------------------------

/// H1 of a greedy graph with only the edges of exactly `size` vertices.
fn full_edges(g: &BipartiteGraph, size: usize) -> Hypergraph {
    let h = neighborhood_hypergraph(&cyclic_core(g)).unwrap();
    let edges = h.edges().iter().filter(|e| e.len() == size).cloned().collect();
    Hypergraph::new(h.num_vertices(), edges).unwrap()
}

fn substitution_trials() -> Outcome {
    let mut trials = 0;
    let mut oracle_checked = 0;
    for t in 0..240u64 {
        let g = [4u32, 6, 8][(t % 3) as usize];
        let t_vertices = 3 + (t % 4) as usize;
        let k = 1 + (t % 2) as usize;
        let template = neighborhood_hypergraph(&cyclic_core(&greedy(t_vertices, 4, 2, 2 * g, 1000 + t)))
            .map_err(|e| e.to_string())?;
        let host_deg = k * t_vertices;
        let host = full_edges(&greedy(20 + 6 * g as usize, 8, host_deg, 2 * g, t), host_deg);
        if host.num_edges() == 0 {
            continue;
        }
        for (what, h) in [("host", &host), ("template", &template)] {
            let found = girth_hypergraph(h).girth;
            ensure(found.at_least(g), || format!("trial {t}: {what} girth {found} < {g}"))?;
        }
        let out = substitute_edges(&SubstitutionPlan::new(host, template, k).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let fast = girth_hypergraph(&out).girth;
        ensure(fast.at_least(g), || format!("trial {t}: output girth {fast} < {g}"))?;
        if out.num_incidences() <= ORACLE_INCIDENCE_LIMIT {
            let max_len = g + 2;
            let oracle = girth_oracle(&out, max_len).map_err(|e| format!("trial {t}: {e}"))?.girth;
            let agree = match fast {
                Girth::Finite(x) if x <= max_len => oracle == fast,
                _ => oracle == Girth::NoneUpTo(max_len),
            };
            ensure(agree, || format!("trial {t}: oracle {oracle} vs fast path {fast}"))?;
            oracle_checked += 1;
        }
        trials += 1;
    }
    ensure(trials >= MIN_SUBSTITUTION_TRIALS, || format!("only {trials} non-empty trials"))?;
    Ok(format!("{trials} trials over g in {{4,6,8}}, {oracle_checked} oracle-confirmed"))
}

// 4 ------------------------------------------------------------------------

fn monomials(q: u64, exps: &[u32]) -> BigUint {
    exps.iter().map(|&k| BigUint::from(q).pow(k)).sum()
}

fn naive_exponent(m: u64, n: u64, outer: u64) -> BigInt {
    (1..n).fold(BigInt::from(m), |e, _| e * outer + 1)
}

fn integral(r: &num_rational::BigRational) -> Result<BigInt, String> {
    ensure(r.is_integer(), || format!("{r} is not an integer"))?;
    Ok(r.to_integer())
}

fn exact_formulas() -> Outcome {
    let two = BigUint::from(2u32);
    let (h, o) = (hexagon_params(&two).unwrap(), octagon_params(&two).unwrap());
    let got = [h.v(), h.b(), o.v(), o.b()];
    let want = [
        monomials(2, &[0, 1, 4, 5, 8, 9]),
        monomials(2, &[0, 3, 4, 7, 8, 11]),
        monomials(2, &[0, 1, 3, 4, 6, 7, 9, 10]),
        monomials(2, &[0, 2, 3, 5, 6, 8, 9, 11]),
    ];
    ensure(got == want, || format!("small-order counts {got:?} vs {want:?}"))?;
    ensure(want.iter().map(|x| x.to_u64().unwrap()).eq([819, 2457, 1755, 2925]), || {
        "monomial oracle disagrees with 819/2457/1755/2925".into()
    })?;
    let q522 = q_sequence(5, 2, 2).map_err(|e| e.to_string())?.expand();
    ensure(q522 == Some(BigUint::from(5u32).pow(19u32)), || "Q_{5,2,2} != 5^19".into())?;

    let mut compared = 0;
    for p in [2u64, 3, 5, 7] {
        for m in 1..=12 {
            if check_hexagon_assumptions(p, m).is_err() {
                continue;
            }
            for n in 1..=4 {
                let closed = integral(&q_exponent(m, n))?;
                ensure(closed == q_exponent_recursive(m, n) && closed == naive_exponent(m, n, 9), || {
                    format!("Q exponent mismatch at p {p} m {m} n {n}")
                })?;
                compared += 1;
            }
        }
    }
    for m in (5..=13).step_by(2) {
        for n in 1..=4 {
            let closed = integral(&q_prime_exponent(m, n))?;
            ensure(closed == q_prime_exponent_recursive(m, n) && closed == naive_exponent(m, n, 10), || {
                format!("Q' exponent mismatch at m {m} n {n}")
            })?;
            compared += 1;
        }
    }
    for n in 1..=3u32 {
        let (nine, ten) = (9u64.pow(n), 10u64.pow(n));
        let lhs = integral(&q_exponent(9 * nine + 1, n as u64))?;
        let rhs = integral(&q_exponent(nine, n as u64 + 1))?;
        ensure(lhs == rhs && lhs == naive_exponent(nine, n as u64 + 1, 9), || {
            format!("hexagon level identity fails at n {n}")
        })?;
        let lhs = integral(&q_prime_exponent(10 * ten + 1, n as u64))?;
        let rhs = integral(&q_prime_exponent(ten, n as u64 + 1))?;
        ensure(lhs == rhs && lhs == naive_exponent(ten, n as u64 + 1, 10), || {
            format!("octagon level identity fails at n {n}")
        })?;
    }
    Ok(format!("819/2457/1755/2925, Q_{{5,2,2}} = 5^19, {compared} closed forms, level identities n <= 3"))
}

// 5 ------------------------------------------------------------------------

fn certificates() -> Outcome {
    let mut notes = Vec::new();
    for (p, m, n, r, girth, exp, power) in [(5u64, 2, 2, 3, 6u32, 231u32, 64u32), (2, 5, 2, 3, 8, 616, 72)] {
        let start = Instant::now();
        let c = certificate(p, m, n, r, girth).map_err(|e| e.to_string())?;
        let t = within(start, CERTIFICATE_SECS, "certificate")?;
        ensure(c.status() == Status::Valid, || {
            format!("girth {girth}: failed {:?}", c.failures().map(|f| f.name.clone()).collect::<Vec<_>>())
        })?;
        let bound = format!("{p}^{exp}");
        ensure(c.value("E_n-bound") == Some(bound.as_str()), || {
            format!("girth {girth}: edge bound {:?}, expected {bound}", c.value("E_n-bound"))
        })?;
        let edges: BigUint = c.value("E_n").ok_or("no E_n value")?.parse().map_err(|_| "bad E_n")?;
        let floor = BigUint::from(p).pow(exp);
        ensure(edges.pow(power) >= floor.pow(power), || format!("girth {girth}: |E|^{power} below bound"))?;
        notes.push(format!("{bound} in {t:.1?}"));
    }
    Ok(format!("both VALID: {}", notes.join(", ")))
}

// 6 ------------------------------------------------------------------------

/// `v(p^e)` from monomials.
fn v_hex(p: u64, e: &BigInt) -> BigUint {
    let q = BigUint::from(p).pow(e.to_u32().unwrap());
    [0u32, 1, 4, 5, 8, 9].iter().map(|&k| (&q).pow(k)).sum()
}

fn v_oct(e: &BigInt) -> BigUint {
    let q = BigUint::one() << e.to_usize().unwrap();
    [0u32, 1, 3, 4, 6, 7, 9, 10].iter().map(|&k| (&q).pow(k)).sum()
}

fn sandwich_planning() -> Outcome {
    let one = BigUint::one();
    let seed = plan_parameters_hexagon(5, 3, &v_hex(5, &naive_exponent(2, 1, 9)))
        .map_err(|e| e.to_string())?
        .seed
        .value;
    let v531 = v_hex(5, &naive_exponent(3, 1, 9));
    let hex = [(seed.clone(), (2, 1)), (&v531 - &one, (2, 1)), (v531.clone(), (3, 1))];
    for (target, want) in &hex {
        let plan = plan_parameters_hexagon(5, 3, target).map_err(|e| e.to_string())?;
        ensure((plan.m, plan.n) == *want, || format!("hexagon N {target}: got ({}, {})", plan.m, plan.n))?;
        let low = v_hex(5, &naive_exponent(plan.m, plan.n, 9));
        let high = v_hex(5, &naive_exponent(plan.m + 1, plan.n, 9));
        ensure(low <= *target && *target < high && check_sandwich_hexagon(5, plan.m, plan.n, target), || {
            format!("hexagon sandwich fails at N {target}")
        })?;
    }

    let v5 = v_oct(&naive_exponent(5, 1, 10));
    let v7 = v_oct(&naive_exponent(7, 1, 10));
    let oct = [(v5, (5, 1)), (&v7 - &one, (5, 1)), (v7, (7, 1))];
    for (target, want) in &oct {
        let plan = plan_parameters_octagon(3, target).map_err(|e| e.to_string())?;
        ensure((plan.m, plan.n) == *want, || format!("octagon N {target}: got ({}, {})", plan.m, plan.n))?;
        let low = v_oct(&naive_exponent(plan.m, plan.n, 10));
        let high = v_oct(&naive_exponent(plan.m + 2, plan.n, 10));
        ensure(low <= *target && *target < high && check_sandwich_octagon(plan.m, plan.n, target), || {
            format!("octagon sandwich fails at N {target}")
        })?;
    }
    Ok(format!("hexagon N* = {seed} -> (2,1), v-1 -> (2,1), v -> (3,1); octagon m 5, 7 as expected"))
}

// 7 ------------------------------------------------------------------------

/// `log2(p) * 2^out_bits` by repeated squaring in `work_bits` fixed point.
fn log2_fixed(p: u64, out_bits: u32, work_bits: u32) -> BigUint {
    let int_part = 63 - p.leading_zeros();
    let one = BigUint::one() << work_bits;
    let two = &one << 1;
    let mut y = (BigUint::from(p) << work_bits) >> int_part;
    let mut frac = BigUint::zero();
    for _ in 0..out_bits {
        y = (&y * &y) >> work_bits;
        frac <<= 1;
        if y >= two {
            frac += 1u32;
            y >>= 1;
        }
    }
    (BigUint::from(int_part) << out_bits) + frac
}

/// Exponent at `N = 2^k`, in decimal fixed point with `scale`.
fn exponent_oracle(girth: u32, p: u64, k: u64, scale: &BigUint) -> f64 {
    let s = BigInt::from(scale.clone());
    let term = if girth == 6 {
        // log_p N = k / log2 p, then 33 / sqrt(log_p N)
        let bits = 192;
        let lp = log2_fixed(p, bits, 512);
        let log_p_n = (BigUint::from(k) << bits) * scale * scale / lp; // scaled by S^2
        let root = log_p_n.sqrt(); // scaled by S
        BigInt::from(33u32 * scale * scale / root)
    } else {
        // 13 sqrt(10 / k)
        BigInt::from(13u32 * (BigUint::from(10u32) * scale * scale / k).sqrt())
    };
    let (num, den) = if girth == 6 { (11, 8) } else { (11, 9) };
    let e: BigInt = (&s - term) * num / den;
    let sign = if e.is_negative() { -1.0 } else { 1.0 };
    // leading 17 digits suffice for the comparison
    let digits = e.abs().to_string();
    let mag: f64 = digits.parse().unwrap();
    sign * mag / scale.to_string().parse::<f64>().unwrap()
}

fn theorem_exponents() -> Outcome {
    let scale = BigUint::from(10u32).pow(40u32);
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for k in [100u64, 1_000_000] {
        let n_target = BigUint::one() << k as usize;
        for (girth, p) in [(6u32, 2u64), (6, 3), (6, 5), (8, 2)] {
            let got = theorem_bound(girth, p, &n_target).map_err(|e| e.to_string())?.exponent;
            let want = exponent_oracle(girth, p, k, &scale);
            let rel = ((got - want) / want).abs();
            ensure(rel <= THEOREM_REL_TOL, || {
                format!("girth {girth} p {p} N 2^{k}: {got:.15} vs oracle {want:.15}")
            })?;
            worst = worst.max(rel);
            count += 1;
        }
    }
    Ok(format!("{count} cases at N in {{2^100, 2^1000000}}, worst relative error {worst:.1e}"))
}

// 8 ------------------------------------------------------------------------

fn recipe(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("recipes").join(name)
}

fn run_pipeline(name: &str, out: &Path) -> Result<(Hypergraph, Duration), String> {
    let start = Instant::now();
    let o = Command::new(BIN)
        .arg("pipeline")
        .arg(recipe(name))
        .arg("--out-dir")
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    let t = within(start, PIPELINE_SECS, name)?;
    ensure(o.status.success(), || format!("{name}: {}", String::from_utf8_lossy(&o.stderr)))?;
    let report = fs::read_to_string(out.join("report.txt")).map_err(|e| e.to_string())?;
    let last = report
        .lines()
        .find_map(|l| l.strip_prefix("final "))
        .ok_or(format!("{name}: no final output in report"))?;
    let text = fs::read_to_string(out.join(last)).map_err(|e| e.to_string())?;
    Ok((parse_hypergraph(&text).map_err(|e| e.to_string())?, t))
}

fn confirm_girth(h: &Hypergraph, g: u32, name: &str) -> Result<Girth, String> {
    let fast = girth_hypergraph(h).girth;
    ensure(fast.at_least(g), || format!("{name}: girth {fast} < {g}"))?;
    if h.num_incidences() <= ORACLE_INCIDENCE_LIMIT {
        let oracle = girth_oracle(h, 8).map_err(|e| e.to_string())?.girth;
        ensure(oracle.at_least(g), || format!("{name}: oracle girth {oracle} < {g}"))?;
    }
    Ok(fast)
}

fn pipelines(scratch: &Path) -> Outcome {
    let (h, t1) = run_pipeline("greedy-path.txt", &scratch.join("greedy-path"))?;
    ensure(h.num_edges() > 0 && h.edges().iter().all(|e| e.len() == 3), || {
        "greedy-path output is not 3-uniform".into()
    })?;
    let g1 = confirm_girth(&h, 6, "greedy-path")?;
    let first = format!("{} 3-edges girth {g1} in {t1:.1?}", h.num_edges());

    let (h, t2) = run_pipeline("hexagon-split.txt", &scratch.join("hexagon-split"))?;
    ensure(h.num_vertices() == 100 && h.num_edges() == 63 && h.edges().iter().all(|e| e.len() == 2), || {
        format!("hexagon-split: {} vertices, {} edges", h.num_vertices(), h.num_edges())
    })?;
    let g2 = confirm_girth(&h, 6, "hexagon-split")?;
    Ok(format!("{first}; 63 2-edges on 100 vertices girth {g2} in {t2:.1?}"))
}

// 9 ------------------------------------------------------------------------

const COMMANDS: &[&[&str]] = &[
    &["gen", "plane", "--q", "2", "-o", "plane-2.bgt"],
    &["gen", "quadrangle", "--q", "2", "-o", "quadrangle-2.bgt"],
    &["gen", "hexagon", "--q", "2", "-o", "hexagon-2.bgt"],
    &["gen", "hexagon", "--q", "3", "-o", "hexagon-3.bgt"],
    &["gen", "greedy", "--left", "500", "--right", "20", "--deg", "21", "--girth", "12", "--seed", "1", "-o", "greedy.bgt", "--report", "greedy.txt"],
    &["transform", "nbhd", "hexagon-2.bgt", "-o", "hexagon-2.hgt"],
    &["transform", "split", "hexagon-2.hgt", "--r", "2", "-o", "split.hgt"],
    &["transform", "pad", "split.hgt", "--to", "100", "-o", "pad.hgt"],
    &["transform", "nbhd", "greedy.bgt", "-o", "greedy.hgt"],
    &["transform", "substitute", "greedy.hgt", "--template", "path:3:3", "--k", "3", "-o", "paths.hgt"],
    &["girth", "pad.hgt", "--oracle-max", "8"],
    &["plan", "--girth", "6", "--p", "5", "--r", "3", "--m", "2", "--n", "2", "--cert", "cert-6.txt"],
    &["plan", "--girth", "8", "--r", "3", "--m", "5", "--n", "2", "--cert", "cert-8.txt"],
    &["plan", "--girth", "6", "--p", "5", "--r", "3", "--N", "100000000000000000000000000000000000000000000000000000000000", "--cert", "plan-6.txt"],
    &["plan", "--girth", "8", "--r", "3", "--N", "100000000000000000000000000000000000000000000000000000000000", "--cert", "plan-8.txt"],
    &["pipeline", "RECIPES/greedy-path.txt", "--out-dir", "pipe-greedy"],
    &["pipeline", "RECIPES/hexagon-split.txt", "--out-dir", "pipe-hexagon"],
];

fn run_all(dir: &Path) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let recipes = recipe("");
    for (i, args) in COMMANDS.iter().enumerate() {
        let args: Vec<String> = args
            .iter()
            .map(|a| a.replace("RECIPES/", &recipes.to_string_lossy()))
            .collect();
        let o = Command::new(BIN).args(&args).current_dir(dir).output().map_err(|e| e.to_string())?;
        ensure(o.status.success(), || {
            format!("{}: {}", args.join(" "), String::from_utf8_lossy(&o.stderr))
        })?;
        fs::write(dir.join(format!("stdout-{i:02}.txt")), &o.stdout).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn hashes(dir: &Path) -> BTreeMap<String, String> {
    fn walk(root: &Path, dir: &Path, out: &mut BTreeMap<String, String>) {
        for entry in fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                walk(root, &path, out);
            } else {
                let digest = Sha256::digest(fs::read(&path).unwrap());
                let hex = digest.iter().map(|b| format!("{b:02x}")).collect();
                out.insert(path.strip_prefix(root).unwrap().display().to_string(), hex);
            }
        }
    }
    let mut out = BTreeMap::new();
    walk(dir, dir, &mut out);
    out
}

fn determinism(scratch: &Path) -> Outcome {
    let (a, b) = (scratch.join("run-a"), scratch.join("run-b"));
    run_all(&a)?;
    run_all(&b)?;
    let (ha, hb) = (hashes(&a), hashes(&b));
    ensure(ha.keys().eq(hb.keys()), || "runs produced different file sets".into())?;
    let differing: Vec<&String> = ha.iter().filter(|(k, v)| hb[*k] != **v).map(|(k, _)| k).collect();
    ensure(differing.is_empty(), || format!("hashes differ: {differing:?}"))?;
    Ok(format!("{} commands, {} files identical across two runs", COMMANDS.len(), ha.len()))
}

fn main() {
    let scratch = tempfile::tempdir().expect("scratch directory");
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("geometry fingerprints", Box::new(geometry_fingerprints)),
        ("halving identity", Box::new(halving_identity)),
        ("substitution girth", Box::new(substitution_trials)),
        ("exact formulas", Box::new(exact_formulas)),
        ("certificates", Box::new(certificates)),
        ("sandwich planning", Box::new(sandwich_planning)),
        ("theorem exponents", Box::new(theorem_exponents)),
        ("end-to-end pipelines", Box::new(|| pipelines(scratch.path()))),
        ("determinism", Box::new(|| determinism(scratch.path()))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (verdict, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {} {name}: {verdict} ({detail}) [{:.1?}]", i + 1, start.elapsed());
    }
    println!("acceptance: {} of {} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
