//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is printed whether it passes or not.

use std::process::Command;
use std::time::{Duration, Instant};

use edgeset_core::claims::{run_claim, ClaimParams, Profile, Status};
use edgeset_core::domination::ced_report;
use edgeset_core::edge_degree::general_edge_degree;
use edgeset_core::esg::{
    build_edge_set_graph, degree_profile, max_degree_formula, singleton_degree, subset_degree,
    BuildMode,
};
use edgeset_core::graph::{
    are_isomorphic, enumerate_connected_graphs, line_graph, make_complete, make_cycle, make_path,
    make_star, Family, Graph,
};
use edgeset_core::oracle;
use edgeset_core::subset::EdgeMask;

struct Check {
    failures: Vec<String>,
    summary: String,
}

impl Check {
    fn new() -> Self {
        Check {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn within(&mut self, started: Instant, budget: Duration) {
        let spent = started.elapsed();
        self.expect(spent < budget, || format!("took {spent:.1?}, budget {budget:?}"));
    }
}

fn label(g: &Graph) -> String {
    g.to_string()
}

/// Paths, cycles, stars and complete graphs with ε ≤ 10, then every
/// connected graph on at most five vertices.
fn universe() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut push = |f: Family| out.push((f.symbol(), f.build().unwrap()));
    for n in 2..=11 {
        push(Family::Path(n));
    }
    for n in 3..=10 {
        push(Family::Cycle(n));
    }
    for m in 1..=10 {
        push(Family::Star(m));
    }
    for n in 2..=5 {
        push(Family::Complete(n));
    }
    for g in enumerate_connected_graphs(5, 10, false).unwrap() {
        out.push((label(&g), g));
    }
    out
}

fn criterion_1() -> Check {
    let started = Instant::now();
    let mut c = Check::new();
    let cases = [
        ("Γ(P_2) ≅ K_1", make_path(2).unwrap(), Graph::empty(1)),
        ("Γ(P_3) ≅ C_3", make_path(3).unwrap(), make_cycle(3).unwrap()),
        ("Γ(C_3) ≅ K_7", make_cycle(3).unwrap(), make_complete(7).unwrap()),
        ("Γ(K_{1,3}) ≅ K_7", make_star(3).unwrap(), make_complete(7).unwrap()),
    ];
    for (name, host, target) in &cases {
        let gamma = build_edge_set_graph(host, BuildMode::Explicit).unwrap().to_graph().unwrap();
        let brute = oracle::esg_graph(host).unwrap();
        c.expect(are_isomorphic(&gamma, target).is_isomorphic(), || format!("{name} fails"));
        c.expect(are_isomorphic(&brute, target).is_isomorphic(), || format!("{name} fails by brute force"));
    }
    c.within(started, Duration::from_secs(1));
    c.summary = "4 identities by exact isomorphism".into();
    c
}

fn criterion_2(universe: &[(String, Graph)]) -> Check {
    let started = Instant::now();
    let mut c = Check::new();
    let mut singletons = 0;
    for (name, g) in universe {
        let brute = oracle::esg_degrees(g).unwrap();
        let epsilon = g.size();
        for k in 0..epsilon {
            singletons += 1;
            let analytic = singleton_degree(epsilon, general_edge_degree(g, k).unwrap());
            let actual = brute[(1 << k) - 1];
            c.expect(analytic == actual, || format!("{name} e{}: {analytic} vs {actual}", k + 1));
        }
    }
    c.within(started, Duration::from_secs(30));
    c.summary = format!("{singletons} singletons over {} hosts", universe.len());
    c
}

fn criterion_3_and_4(universe: &[(String, Graph)]) -> (Check, Check) {
    let started = Instant::now();
    let mut c3 = Check::new();
    let mut c4 = Check::new();
    let mut subsets = 0u64;
    for (name, g) in universe {
        let epsilon = g.size();
        let brute = oracle::esg_degrees(g).unwrap();
        for (k, &actual) in brute.iter().enumerate() {
            subsets += 1;
            let mask = EdgeMask::new(k as u64 + 1, epsilon).unwrap();
            let analytic = subset_degree(g, mask).unwrap();
            c3.expect(analytic == actual, || format!("{name} {mask}: {analytic} vs {actual}"));
        }
        let max = *brute.iter().max().unwrap();
        let min = *brute.iter().min().unwrap();
        c4.expect(max == max_degree_formula(epsilon), || {
            format!("{name}: Δ = {max}, expected {}", max_degree_formula(epsilon))
        });
        let bound = 2 * (epsilon as u64 - 1);
        c4.expect(min >= bound, || format!("{name}: δ = {min} < {bound}"));
    }
    c3.within(started, Duration::from_secs(120));
    c3.summary = format!("{subsets} subsets over {} hosts", universe.len());
    c4.summary = format!("Δ and δ on {} hosts", universe.len());
    (c3, c4)
}

fn criterion_5(universe: &[(String, Graph)]) -> Check {
    let mut c = Check::new();
    let mut odd_hosts = 0;
    for (name, g) in universe {
        let brute = oracle::esg_degrees(g).unwrap();
        let odd = brute.iter().position(|d| d % 2 == 1);
        odd_hosts += usize::from(odd.is_some());
        c.expect(odd.is_none(), || {
            let k = odd.unwrap();
            let mask = EdgeMask::new(k as u64 + 1, g.size()).unwrap();
            format!("{name}: {mask} has odd degree {}", brute[k])
        });
        c.expect(oracle::esg_connected(g).unwrap(), || format!("{name}: edge-set graph disconnected"));
    }
    c.summary = format!("{odd_hosts} of {} hosts have an odd-degree vertex", universe.len());
    c
}

fn criterion_6() -> Check {
    let mut c = Check::new();
    let mut hosts: Vec<(String, Graph)> = universe()
        .into_iter()
        .filter(|(_, g)| g.size() <= 7)
        .collect();
    for g in enumerate_connected_graphs(8, 7, false).unwrap() {
        hosts.push((label(&g), g));
    }
    for (name, g) in &hosts {
        let induced = build_edge_set_graph(g, BuildMode::Implicit)
            .unwrap()
            .singleton_subgraph()
            .unwrap();
        let line = line_graph(g).unwrap();
        c.expect(are_isomorphic(&induced, &line).is_isomorphic(), || {
            format!("{name}: singleton subgraph is not the line graph")
        });
    }
    c.summary = format!("{} hosts with ε ≤ 7", hosts.len());
    c
}

fn complete_by_brute_force(g: &Graph) -> bool {
    let target = (1u64 << g.size()) - 2;
    oracle::esg_degrees(g).unwrap().iter().all(|&d| d == target)
}

fn criterion_7() -> Check {
    let mut c = Check::new();
    let hosts: Vec<Graph> = enumerate_connected_graphs(6, 8, false)
        .unwrap()
        .into_iter()
        .filter(|g| g.size() >= 4)
        .collect();
    let mut complete = 0;
    for g in &hosts {
        let is_complete = complete_by_brute_force(g);
        let is_star = are_isomorphic(g, &make_star(g.size()).unwrap()).is_isomorphic();
        complete += usize::from(is_complete);
        c.expect(is_complete == is_star, || {
            format!("{}: complete = {is_complete}, star = {is_star}", label(g))
        });
    }
    let exceptions = [
        ("K_{1,1}", make_star(1).unwrap()),
        ("K_{1,2}", make_star(2).unwrap()),
        ("K_{1,3}", make_star(3).unwrap()),
        ("P_3", make_path(3).unwrap()),
        ("C_3", make_cycle(3).unwrap()),
    ];
    for (name, g) in &exceptions {
        c.expect(complete_by_brute_force(g), || format!("{name}: edge-set graph not complete"));
    }
    c.summary = format!("{complete} complete among {} hosts, plus 5 small cases", hosts.len());
    c
}

fn criterion_8(sparse: &[Graph]) -> Check {
    let mut c = Check::new();
    for g in sparse {
        let esg: u64 = oracle::esg_degrees(g).unwrap().iter().sum();
        let set: u64 = oracle::set_graph_degrees(g.size()).unwrap().iter().sum();
        c.expect(esg > set, || format!("{}: {esg} ≤ {set}", label(g)));
    }
    let p3 = make_path(3).unwrap();
    let esg: u64 = oracle::esg_degrees(&p3).unwrap().iter().sum();
    let set: u64 = oracle::set_graph_degrees(2).unwrap().iter().sum();
    c.expect((esg, set) == (6, 4), || format!("ε = 2 gives {esg} > {set}"));
    c.summary = format!("{} hosts with 2 ≤ ε ≤ 8; ε = 2 gives {esg} > {set}", sparse.len());
    c
}

fn criterion_9(sparse: &[Graph]) -> Check {
    let mut c = Check::new();
    let mut supersets = 0u64;
    for g in sparse {
        let ced = oracle::all_ced_sets(g).unwrap();
        let degrees = oracle::esg_degrees(g).unwrap();
        let max = max_degree_formula(g.size());
        for (k, &d) in degrees.iter().enumerate() {
            let s = k as u64 + 1;
            if let Some(x) = ced.iter().find(|&&x| x & s == x) {
                supersets += 1;
                c.expect(d == max, || {
                    let e = g.size();
                    format!(
                        "{}: {} contains CED set {} but has degree {d}",
                        label(g),
                        EdgeMask::new(s, e).unwrap(),
                        EdgeMask::new(*x, e).unwrap()
                    )
                });
            }
        }
    }
    c.summary = format!("{supersets} supersets of CED sets over {} hosts", sparse.len());
    c
}

fn criterion_10() -> Check {
    let started = Instant::now();
    let mut c = Check::new();
    let census_index = |g: &Graph| {
        let all = oracle::all_ced_sets(g).unwrap();
        let min = all.iter().map(|x| x.count_ones()).min().unwrap();
        all.iter().filter(|x| x.count_ones() == min).count() as u64
    };
    let brute_max_count = |g: &Graph| {
        let d = oracle::esg_degrees(g).unwrap();
        let max = *d.iter().max().unwrap();
        d.iter().filter(|&&x| x == max).count() as u64
    };
    for n in 4..=9 {
        let g = make_path(n).unwrap();
        let index = ced_report(&g).unwrap().ced_index;
        c.expect(index == 1 && census_index(&g) == 1, || format!("𝔈(P_{n}) = {index}"));
        let count = degree_profile(&g).unwrap().max_count;
        c.expect(count == 4, || format!("𝔐(P_{n}) = {count}, expected 4"));
    }
    for n in 3..=9 {
        let g = make_cycle(n).unwrap();
        let index = ced_report(&g).unwrap().ced_index;
        c.expect(index == n as u64 && census_index(&g) == index, || format!("𝔈(C_{n}) = {index}"));
        let count = degree_profile(&g).unwrap().max_count;
        let expected = 3 * n as u64 + 1;
        c.expect(count == expected, || format!("𝔐(C_{n}) = {count}, expected {expected}"));
    }
    let k4 = make_complete(4).unwrap();
    let index = ced_report(&k4).unwrap().ced_index;
    c.expect(index == 12 && census_index(&k4) == 12, || format!("𝔈(K_4) = {index}"));
    let count = degree_profile(&k4).unwrap().max_count;
    let brute = brute_max_count(&k4);
    c.expect(count == brute, || format!("𝔐(K_4) = {count}, brute force {brute}"));
    c.within(started, Duration::from_secs(120));
    c.summary = format!("paths 4..9, cycles 3..9, K_4 (𝔐(K_4) = {count})");
    c
}

fn edgeset() -> Command {
    Command::new(env!("CARGO_BIN_EXE_edgeset"))
}

fn criterion_11() -> Check {
    let mut c = Check::new();
    let quick = ClaimParams::new(Profile::Quick);
    let cases = [
        ("Prop3.1a", Some(3)),
        ("Prop3.1c", Some(5)),
        ("Prop3.2-Kn", Some(5)),
        ("Cor3.4-regular", None),
    ];
    let mut statuses = Vec::new();
    for (id, n) in cases {
        let params = ClaimParams { n, ..quick };
        let v = run_claim(id, &params).unwrap();
        statuses.push(format!("{id} {}", v.status));
        c.expect(v.verdict_only, || format!("{id} is not verdict-only"));
        c.expect(matches!(v.status, Status::Pass | Status::Fail), || format!("{id}: {}", v.status));
        c.expect(!v.evidence.is_empty() && !v.computed.is_empty(), || format!("{id}: no witness"));
        if v.status == Status::Fail {
            c.expect(v.evidence.starts_with("counterexample: "), || format!("{id}: FAIL without witness"));
        }
        let mut cmd = edgeset();
        cmd.args(["verify", "--claim", id]);
        if let Some(n) = n {
            cmd.args(["--n", &n.to_string()]);
        }
        let status = cmd.output().unwrap().status;
        c.expect(status.code() == Some(0), || format!("verify --claim {id} exits {status}"));
    }
    c.summary = statuses.join(", ");
    c
}

fn criterion_12() -> Check {
    let mut c = Check::new();
    let run = || {
        edgeset()
            .args(["verify", "--profile", "full", "--format", "json"])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    c.expect(!first.stdout.is_empty(), || "empty report".into());
    c.expect(first.stdout == second.stdout, || "reports differ".into());
    c.expect(first.status.code() == second.status.code(), || "exit codes differ".into());
    c.summary = format!("{} bytes, exit code {:?}", first.stdout.len(), first.status.code());
    c
}

fn main() {
    let universe = universe();
    let sparse: Vec<Graph> = enumerate_connected_graphs(9, 8, false)
        .unwrap()
        .into_iter()
        .filter(|g| g.size() >= 2)
        .collect();
    let (c3, c4) = criterion_3_and_4(&universe);
    let results = [
        ("fixed identities", criterion_1()),
        ("singleton degree formula", criterion_2(&universe)),
        ("subset degree formula", c3),
        ("maximum and minimum degree", c4),
        ("Eulerian edge-set graphs", criterion_5(&universe)),
        ("singletons induce the line graph", criterion_6()),
        ("complete edge-set graphs are stars", criterion_7()),
        ("degree sum exceeds the set-graph", criterion_8(&sparse)),
        ("supersets of CED sets have maximum degree", criterion_9(&sparse)),
        ("CED-index and maximum-degree counts", criterion_10()),
        ("verdict-only claims", criterion_11()),
        ("deterministic full verification", criterion_12()),
    ];
    let mut failed = 0;
    for (k, (name, check)) in results.iter().enumerate() {
        if check.failures.is_empty() {
            println!("criterion {}: PASS {name} ({})", k + 1, check.summary);
        } else {
            failed += 1;
            let shown: Vec<&str> = check.failures.iter().take(3).map(String::as_str).collect();
            println!(
                "criterion {}: FAIL {name} ({}; {} failures, first: {})",
                k + 1,
                check.summary,
                check.failures.len(),
                shown.join("; ")
            );
        }
    }
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
