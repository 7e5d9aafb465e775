//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact
//! integer or structural equality (tolerance 0).

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pfbraid_core::bijection::{in_vector, reconstruct, reconstruct_geometric};
use pfbraid_core::braid::{
    diagram_rule_tally, flip_row, generator_order, mutate, mutate_pf, orbit_graph, Direction, YoungDiagram,
};
use pfbraid_core::dbasis::{enumerate_recursive, to_arcs, validate, DistinguishedBasis};
use pfbraid_core::noncrossing::{chain_to_basis, enumerate_chains, lambda_chain, pi_chain};
use pfbraid_core::parking::{catalan, enumerate_nondecreasing, enumerate_parking, to_diagram, ParkingFunction};
use pfbraid_core::quiver::{
    euler, exceptional_sequence, ext_dim, hom_dim, hom_dim_oracle, is_exceptional_sequence,
    is_nondecreasing_collection, modules_of, IntervalModule,
};
use pfbraid_core::roots::{positive_roots, seifert};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const COUNT_BUDGET: Duration = Duration::from_secs(60);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pf(v: &[usize]) -> ParkingFunction {
    ParkingFunction::new(v.to_vec()).unwrap()
}

fn basis(n: usize, intervals: &[[usize; 2]]) -> DistinguishedBasis {
    DistinguishedBasis::from_intervals(n, intervals).unwrap()
}

fn lyashko_looijenga(n: usize) -> usize {
    (n + 1).pow(n as u32 - 1)
}

fn c1_counts() -> Outcome {
    let start = Instant::now();
    for n in 1..=5 {
        let got = enumerate_recursive(n).len();
        ensure(got == lyashko_looijenga(n), || format!("enumerate_recursive({n}) = {got}"))?;
    }
    for n in 1..=7 {
        let got: HashSet<DistinguishedBasis> = enumerate_parking(n).unwrap().map(|f| reconstruct(&f)).collect();
        if n <= 5 {
            for b in &got {
                ensure(validate(b.roots()).is_ok(), || format!("reconstructed {b} is not distinguished"))?;
            }
        }
        ensure(got.len() == lyashko_looijenga(n), || format!("reconstruct over PF_{n}: {}", got.len()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < COUNT_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("n<=5 recursive, n<=7 via PF_n, {:.1}s", elapsed.as_secs_f64()))
}

fn c2_golden_lists() -> Outcome {
    let sorted = |mut v: Vec<Vec<[usize; 2]>>| {
        v.sort();
        v
    };
    let a2 = sorted(vec![vec![[1, 1], [2, 2]], vec![[2, 2], [1, 2]], vec![[1, 2], [1, 1]]]);
    let a3 = sorted(vec![
        vec![[1, 1], [2, 2], [3, 3]],
        vec![[1, 1], [3, 3], [2, 3]],
        vec![[1, 1], [2, 3], [2, 2]],
        vec![[2, 2], [1, 2], [3, 3]],
        vec![[2, 2], [3, 3], [1, 3]],
        vec![[2, 2], [1, 3], [1, 2]],
        vec![[3, 3], [1, 1], [2, 3]],
        vec![[3, 3], [2, 3], [1, 3]],
        vec![[3, 3], [1, 3], [1, 1]],
        vec![[1, 2], [1, 1], [3, 3]],
        vec![[1, 2], [3, 3], [1, 1]],
        vec![[2, 3], [1, 3], [2, 2]],
        vec![[2, 3], [2, 2], [1, 3]],
        vec![[1, 3], [1, 1], [2, 2]],
        vec![[1, 3], [2, 2], [1, 2]],
        vec![[1, 3], [1, 2], [1, 1]],
    ]);
    for (n, want) in [(2, a2), (3, a3)] {
        let got = sorted(enumerate_recursive(n).iter().map(DistinguishedBasis::intervals).collect());
        ensure(got == want, || format!("A_{n} list differs: {got:?}"))?;
    }
    Ok("A_2: 3, A_3: 16, as multisets".into())
}

fn c3_round_trips() -> Outcome {
    let mut cases = 0;
    for n in 1..=7 {
        for f in enumerate_parking(n).unwrap() {
            ensure(in_vector(&reconstruct(&f)) == f, || format!("In(reconstruct({f})) != {f}"))?;
            cases += 1;
        }
    }
    for n in 1..=5 {
        for b in enumerate_recursive(n) {
            ensure(reconstruct(&in_vector(&b)) == b, || format!("reconstruct(In({b})) != {b}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases, 0 failures"))
}

fn c4_geometric() -> Outcome {
    let mut cases = 0;
    for n in 1..=7 {
        for f in enumerate_parking(n).unwrap() {
            ensure(reconstruct_geometric(&f) == reconstruct(&f), || format!("differs at {f}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} parking functions, n<=7"))
}

fn c5_worked_examples() -> Outcome {
    let cases: [(Vec<usize>, Vec<[usize; 2]>); 3] = [
        (vec![2, 2, 1], vec![[2, 3], [2, 2], [1, 3]]),
        (vec![1, 1, 2, 2, 2, 4, 6], vec![[1, 7], [1, 1], [2, 5], [2, 3], [2, 2], [4, 4], [6, 6]]),
        (
            vec![3, 11, 7, 5, 9, 8, 5, 2, 1, 10, 2, 12],
            vec![
                [3, 3], [11, 11], [7, 7], [5, 7], [9, 9], [8, 9],
                [5, 5], [2, 9], [1, 9], [10, 11], [2, 3], [12, 12],
            ],
        ),
    ];
    for (f, want) in &cases {
        let want = basis(f.len(), want);
        let got = reconstruct(&pf(f));
        ensure(got == want, || format!("{f:?} -> {got}, want {want}"))?;
        ensure(reconstruct_geometric(&pf(f)) == want, || format!("geometric reading of {f:?}"))?;
    }
    Ok("3 examples".into())
}

fn c6_braid_axioms() -> Outcome {
    let a = |b: &DistinguishedBasis, k| mutate(b, k, Direction::Left).unwrap();
    let mut cases = 0;
    for n in 2..=5 {
        for b in enumerate_recursive(n) {
            for k in 1..n {
                let m = a(&b, k);
                ensure(mutate(&m, k, Direction::Right).unwrap() == b, || format!("beta_{k} alpha_{k} {b}"))?;
                ensure(mutate(&mutate(&b, k, Direction::Right).unwrap(), k, Direction::Left).unwrap() == b, || {
                    format!("alpha_{k} beta_{k} {b}")
                })?;
                for j in k + 2..n {
                    ensure(a(&a(&b, j), k) == a(&a(&b, k), j), || format!("far commutation {k},{j} at {b}"))?;
                }
                if k + 1 < n {
                    ensure(a(&a(&a(&b, k), k + 1), k) == a(&a(&a(&b, k + 1), k), k + 1), || {
                        format!("braid relation at k={k}, {b}")
                    })?;
                }
                let mut x = m;
                let mut order = 1;
                while x != b && order < 10 {
                    x = a(&x, k);
                    order += 1;
                }
                ensure(order == 2 || order == 3, || format!("orbit length {order} at {b}, k={k}"))?;
                ensure(generator_order(&b, k).unwrap() == order, || format!("predictor wrong at {b}, k={k}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (basis, k) pairs, n<=5"))
}

fn c7_figures() -> Outcome {
    let g = orbit_graph(3).unwrap();
    ensure(g.nodes.len() == 16, || format!("{} nodes", g.nodes.len()))?;
    let node = |v: [usize; 3]| g.node_index(&pf(&v)).unwrap();
    let solid = [
        ([3, 1, 1], [1, 1, 1]), ([1, 2, 3], [2, 1, 3]), ([1, 1, 2], [1, 2, 2]),
        ([2, 3, 1], [3, 2, 1]), ([1, 2, 1], [2, 1, 1]), ([2, 1, 1], [1, 2, 1]),
        ([1, 3, 2], [3, 1, 2]), ([3, 1, 2], [1, 3, 2]), ([1, 1, 1], [1, 3, 1]),
        ([1, 3, 1], [3, 1, 1]), ([1, 1, 3], [1, 2, 3]), ([2, 1, 3], [1, 1, 3]),
        ([2, 1, 2], [1, 1, 2]), ([1, 2, 2], [2, 1, 2]), ([3, 2, 1], [2, 2, 1]),
        ([2, 2, 1], [2, 3, 1]),
    ];
    let dashed = [
        ([1, 2, 1], [1, 1, 1]), ([3, 1, 1], [3, 1, 2]), ([1, 2, 3], [1, 3, 2]),
        ([2, 1, 1], [2, 1, 3]), ([1, 1, 2], [1, 2, 1]), ([1, 3, 2], [1, 2, 2]),
        ([3, 1, 2], [3, 2, 1]), ([2, 3, 1], [2, 1, 1]), ([1, 1, 1], [1, 1, 2]),
        ([1, 2, 2], [1, 2, 3]), ([3, 2, 1], [3, 1, 1]), ([2, 1, 3], [2, 3, 1]),
        ([1, 3, 1], [1, 1, 3]), ([1, 1, 3], [1, 3, 1]), ([2, 1, 2], [2, 2, 1]),
        ([2, 2, 1], [2, 1, 2]),
    ];
    for (k, edges) in [(1, &solid), (2, &dashed)] {
        for &(from, to) in edges.iter() {
            ensure(g.step(node(from), k, Direction::Left) == Some(node(to)), || {
                format!("alpha_{k}{from:?} != {to:?}")
            })?;
        }
    }
    let cycle = [
        basis(2, &[[1, 1], [2, 2]]),
        basis(2, &[[2, 2], [1, 2]]),
        basis(2, &[[1, 2], [1, 1]]),
    ];
    for i in 0..3 {
        let got = mutate(&cycle[i], 1, Direction::Left).unwrap();
        ensure(got == cycle[(i + 1) % 3], || format!("alpha_1 {} = {got}", cycle[i]))?;
    }
    Ok("PF_3: 16 nodes, 32 labelled edges; A_2 3-cycle".into())
}

fn c8_diagram_mutation() -> Outcome {
    let mut instances = 0;
    for n in 2..=6 {
        for t in diagram_rule_tally(n, false).unwrap() {
            ensure(t.mismatches == 0, || format!("n={n}: {t:?}"))?;
            instances += t.instances;
        }
    }
    let mut flips = 0;
    for n in 2..=6 {
        for f in enumerate_nondecreasing(n).unwrap() {
            let y = YoungDiagram::of_diagram(&to_diagram(&f));
            let neighbours: Vec<YoungDiagram> = (1..n).map(|k| flip_row(&y, k).unwrap().0).collect();
            for k in 1..n {
                for dir in [Direction::Left, Direction::Right] {
                    let z = YoungDiagram::of_diagram(&to_diagram(&mutate_pf(&f, k, dir).unwrap()));
                    ensure(z == y || neighbours.contains(&z), || format!("{f} k={k} {dir:?}"))?;
                    flips += 1;
                }
            }
        }
    }
    Ok(format!("{instances} diagram mutations, {flips} Young checks, n<=6"))
}

fn c9_quiver() -> Outcome {
    let modules = |n| -> Vec<IntervalModule> { positive_roots(n).into_iter().map(IntervalModule::new).collect() };
    for n in 1..=8 {
        let all = modules(n);
        for v in &all {
            for w in &all {
                ensure(hom_dim(v, w).unwrap() == hom_dim_oracle(v, w).unwrap(), || format!("hom {} {}", v.root, w.root))?;
            }
        }
    }
    for n in 1..=10 {
        let all = modules(n);
        for v in &all {
            for w in &all {
                let (h, e) = (hom_dim(v, w).unwrap() as i32, ext_dim(v, w).unwrap() as i32);
                ensure(euler(v, w).unwrap() == h - e, || format!("euler {} {}", v.root, w.root))?;
                if seifert(&w.root, &v.root).unwrap() == 0 {
                    let want = i32::from(v.root.hi() + 1 == w.root.lo());
                    ensure(e == want, || format!("conditional ext {} {}", v.root, w.root))?;
                }
            }
        }
    }
    let mut tuples = 0;
    for n in 1..=4 {
        let all = modules(n);
        let mut idx = vec![0usize; n];
        loop {
            let seq: Vec<IntervalModule> = idx.iter().map(|&i| all[i]).collect();
            ensure(is_exceptional_sequence(&seq) == exceptional_sequence(&seq).is_ok(), || {
                format!("{:?}", seq.iter().map(|m| m.root.to_string()).collect::<Vec<_>>())
            })?;
            tuples += 1;
            let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < all.len()) else { break };
            idx[p] += 1;
            idx[p + 1..].iter_mut().for_each(|x| *x = 0);
        }
    }
    Ok(format!("hom n<=8, euler/ext n<=10, {tuples} tuples n<=4"))
}

fn c10_noncrossing() -> Outcome {
    for n in 1..=5 {
        let bases = enumerate_recursive(n);
        for b in &bases {
            let c = pi_chain(b);
            let shifted: Vec<usize> = lambda_chain(&c).iter().map(|l| l + 1).collect();
            ensure(shifted == in_vector(b).values(), || format!("Lambda(Pi({b}))+1 = {shifted:?}"))?;
            ensure(chain_to_basis(&c) == *b, || format!("chain_to_basis(Pi({b}))"))?;
        }
        let chains = enumerate_chains(n);
        ensure(chains.len() == lyashko_looijenga(n), || format!("{} chains at n={n}", chains.len()))?;
        for c in &chains {
            ensure(pi_chain(&chain_to_basis(c)) == *c, || format!("Pi(chain_to_basis({c}))"))?;
        }
    }
    Ok("n<=5".into())
}

fn c11_catalan() -> Outcome {
    for n in 1..=6 {
        let mut nondecreasing = HashSet::new();
        let mut distinct_right = HashSet::new();
        let mut no_mono = HashSet::new();
        for f in enumerate_parking(n).unwrap() {
            let b = reconstruct(&f);
            let mut set = b.roots().to_vec();
            set.sort();
            if f.is_nondecreasing() {
                nondecreasing.insert(set.clone());
            }
            if to_arcs(&b).arcs.iter().map(|a| a.right).collect::<HashSet<_>>().len() == n {
                distinct_right.insert(set.clone());
            }
            if is_nondecreasing_collection(&modules_of(&b)) {
                no_mono.insert(set);
            }
        }
        let c = catalan(n) as usize;
        ensure(nondecreasing.len() == c, || format!("n={n}: {} non-decreasing", nondecreasing.len()))?;
        ensure(nondecreasing == distinct_right, || format!("n={n}: distinct-right-end sets differ"))?;
        ensure(nondecreasing == no_mono, || format!("n={n}: non-decreasing collections differ"))?;
    }
    Ok("n<=6, compared as root sets".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("basis counts equal (n+1)^(n-1)", c1_counts),
        ("A_2 and A_3 golden lists", c2_golden_lists),
        ("bijection round trips", c3_round_trips),
        ("ray reading equals algebraic reconstruction", c4_geometric),
        ("worked examples", c5_worked_examples),
        ("braid axioms and generator orders", c6_braid_axioms),
        ("PF_3 and A_2 action figures", c7_figures),
        ("diagram mutation rules and Young flips", c8_diagram_mutation),
        ("quiver hom/ext consistency", c9_quiver),
        ("non-crossing chains", c10_noncrossing),
        ("Catalan families coincide", c11_catalan),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  {:>2}  {name}  [{detail}; tolerance exact]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}  [{why}; tolerance exact]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
