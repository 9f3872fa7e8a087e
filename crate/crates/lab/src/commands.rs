//! Subcommand arguments and implementations.

use anyhow::{bail, Context};
use clap::Args;
use rayon::prelude::*;

use prodap_core::bounds::{lemma1_bound_check, remark_bound};
use prodap_core::chebotarev::{
    ChebotarevReport, PrimeRecord, PrimeScan, PrimeTally, MAX_EMPIRICS_DEGREE,
};
use prodap_core::elimination::{
    dichotomy_check, eliminate, erdos_sides, proposition1_check, theorem1_selection,
};
use prodap_core::graph::{build_graph, find_shortest_even_cycle, verify_acyclicity_argument};
use prodap_core::poly::IntPolynomial;
use prodap_core::progression::{
    contains_ap, cover_search, longest_ap_in_set, product_set, NormalizedAP,
};
use prodap_core::quadratic::QuadraticNumber;
use prodap_core::theorem2::{
    cycle_instance, shifted_progression, theorem2_analyze, vanishing_indices, Theorem2Branch,
};

use crate::table::{flag, joined, real, Table};
use crate::{cache, corpus, edgelist, parse, Command, GlobalArgs, Output};

pub fn dispatch(cmd: &Command, global: &GlobalArgs) -> anyhow::Result<Output> {
    let table = match cmd {
        Command::ApSearch(a) => ap_search(a, global.seed)?,
        Command::Eliminate(a) => eliminate_cmd(a)?,
        Command::Dichotomy(a) => dichotomy(a)?,
        Command::Select(a) => select(a, global.seed)?,
        Command::Prop1(a) => prop1(a)?,
        Command::Graph(a) => return graph(a, global.seed),
        Command::Cycles(a) => cycles(a, global.seed)?,
        Command::Cheb(a) => cheb(a)?,
        Command::Cover(a) => cover(a)?,
        Command::Bounds(a) => bounds(a)?,
    };
    Ok(Output {
        bytes: table.to_bytes()?,
        violations: table.violations(),
    })
}

#[derive(Debug, Clone, Args)]
pub struct ApSearchArgs {
    /// Explicit base set `b1,b2,…`; a seeded random corpus otherwise.
    #[arg(long)]
    pub base: Option<String>,
    /// Number of random sets.
    #[arg(long, default_value_t = 200)]
    pub sets: usize,
    #[arg(long, default_value_t = 10)]
    pub n_min: usize,
    #[arg(long, default_value_t = 40)]
    pub n_max: usize,
    /// Largest element of a random set.
    #[arg(long, default_value_t = 10_000)]
    pub max_elem: u64,
    /// Rows with longest/(n·ln n) at or above this value fail.
    #[arg(long, default_value_t = 40.0)]
    pub ceiling: f64,
}

/// One row of the progression-length experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ApRecord {
    pub n: usize,
    pub product_set_size: usize,
    pub longest: usize,
    pub first: u128,
    pub difference: u128,
    /// `longest / (n ln n)`; zero for `n < 2`.
    pub ratio: f64,
}

pub fn ap_record(base: &[u64]) -> anyhow::Result<ApRecord> {
    let ps = product_set(base)?;
    let w = longest_ap_in_set(ps.elements()).context("empty product set")?;
    let n = ps.base().len();
    let scale = n as f64 * (n as f64).ln();
    Ok(ApRecord {
        n,
        product_set_size: ps.elements().len(),
        longest: w.len,
        first: w.first,
        difference: w.difference,
        ratio: if n >= 2 { w.len as f64 / scale } else { 0.0 },
    })
}

fn ap_search(args: &ApSearchArgs, seed: u64) -> anyhow::Result<Table> {
    let bases = match &args.base {
        Some(b) => vec![parse::u64_list(b)?],
        None => {
            if args.n_min == 0 || args.n_min > args.n_max || (args.n_max as u64) > args.max_elem {
                bail!("need 1 ≤ n-min ≤ n-max ≤ max-elem");
            }
            corpus::random_bases(seed, args.sets, args.n_min, args.n_max, args.max_elem)
        }
    };
    let records: Vec<ApRecord> = bases
        .par_iter()
        .map(|b| ap_record(b))
        .collect::<anyhow::Result<_>>()?;
    let mut t = Table::new(
        "longest progression in B.B against n ln n",
        &[
            "set",
            "n",
            "product_set_size",
            "longest",
            "first",
            "difference",
            "ratio",
            "ok",
        ],
    );
    let max = records.iter().map(|r| r.ratio).fold(0.0, f64::max);
    t.note(format!(
        "seed={seed} sets={} ceiling={} max_ratio={}",
        records.len(),
        real(args.ceiling),
        real(max)
    ));
    for (i, r) in records.iter().enumerate() {
        let ok = r.ratio < args.ceiling;
        t.checked_row(
            ok,
            vec![
                i.to_string(),
                r.n.to_string(),
                r.product_set_size.to_string(),
                r.longest.to_string(),
                r.first.to_string(),
                r.difference.to_string(),
                real(r.ratio),
                flag(ok),
            ],
        );
    }
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long = "N")]
    pub len: Option<u64>,
    /// Sweep all coprime r ≤ r-max, d ≤ d-max and N in [n-min, n-max].
    #[arg(long)]
    pub grid: bool,
    #[arg(long, default_value_t = 20)]
    pub r_max: u64,
    #[arg(long, default_value_t = 20)]
    pub d_max: u64,
    #[arg(long, default_value_t = 1)]
    pub n_min: u64,
    #[arg(long, default_value_t = 60)]
    pub n_max: u64,
}

impl GridArgs {
    fn points(&self) -> anyhow::Result<Vec<(u64, u64, u64)>> {
        if !self.grid {
            let (Some(r), Some(d), Some(n)) = (self.r, self.d, self.len) else {
                bail!("--r, --d and --N are required unless --grid is given");
            };
            return Ok(vec![(r, d, n)]);
        }
        let mut pts = Vec::new();
        for r in 1..=self.r_max {
            for d in 1..=self.d_max {
                if num_integer::gcd(r, d) != 1 {
                    continue;
                }
                for n in self.n_min.max(1)..=self.n_max {
                    pts.push((r, d, n));
                }
            }
        }
        Ok(pts)
    }
}

fn eliminate_cmd(args: &GridArgs) -> anyhow::Result<Table> {
    let pts = args.points()?;
    let rows: Vec<(bool, Vec<String>)> = pts
        .par_iter()
        .map(|&(r, d, n)| -> anyhow::Result<_> {
            let res = eliminate(r, d, n)?;
            let sides = erdos_sides(&res);
            let holds = sides.holds();
            Ok((
                holds,
                vec![
                    r.to_string(),
                    d.to_string(),
                    n.to_string(),
                    res.removed_count().to_string(),
                    joined(
                        res.removed
                            .iter()
                            .map(|x| format!("{}:{}", x.prime, x.index)),
                    ),
                    joined(res.absorbed.iter().map(|(p, i)| format!("{p}:{i}"))),
                    sides.lhs.to_string(),
                    sides.rhs.to_string(),
                    flag(holds),
                ],
            ))
        })
        .collect::<anyhow::Result<_>>()?;
    let mut t = Table::new(
        "Erdős elimination inequality r(r+d)…(r+(N−1−M)d) ≤ (N−1)!",
        &[
            "r", "d", "N", "M", "removed", "absorbed", "lhs", "rhs", "holds",
        ],
    );
    t.note("removed and absorbed list prime:index; absorbed primes had their term removed already");
    for (ok, row) in rows {
        t.checked_row(ok, row);
    }
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct DichotomyArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Violations at N below this are reported but do not fail.
    #[arg(long, default_value_t = 30)]
    pub strict_from: u64,
}

fn dichotomy(args: &DichotomyArgs) -> anyhow::Result<Table> {
    let mut pts = args.grid.points()?;
    pts.retain(|&(_, _, n)| n >= 2);
    let checks = pts
        .par_iter()
        .map(|&(r, d, n)| dichotomy_check(r, d, n).map(|c| (r, d, c)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut t = Table::new(
        "elimination dichotomy: d, r < N² or M > N/2",
        &[
            "r",
            "d",
            "N",
            "M",
            "small_parameters",
            "many_removed",
            "violated",
            "ok",
        ],
    );
    let smallest = checks
        .iter()
        .filter(|(_, _, c)| c.violated())
        .map(|(_, _, c)| c.len)
        .min();
    t.note(format!(
        "strict_from={} smallest_violating_N={}",
        args.strict_from,
        smallest.map_or("none".to_string(), |n| n.to_string())
    ));
    for (r, d, c) in checks {
        let ok = !c.violated() || c.len < args.strict_from;
        t.checked_row(
            ok,
            vec![
                r.to_string(),
                d.to_string(),
                c.len.to_string(),
                c.removed_count.to_string(),
                flag(c.small_parameters),
                flag(c.many_removed),
                flag(c.violated()),
                flag(ok),
            ],
        );
    }
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct SelectArgs {
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long = "N")]
    pub len: u64,
    /// Common factor D of the progression D·(r + d·[N]).
    #[arg(long, default_value_t = 1)]
    pub scale: u64,
    /// Base set B with D·A'' ⊆ B.B; by default each selected term is split
    /// into a random seeded factor pair.
    #[arg(long)]
    pub base: Option<String>,
}

fn select(args: &SelectArgs, seed: u64) -> anyhow::Result<Table> {
    let sel = theorem1_selection(args.r, args.d, args.len)?;
    let base: Vec<u64> = match &args.base {
        Some(b) => parse::u64_list(b)?,
        None => {
            let mut rng = corpus::rng(seed);
            let mut b = Vec::new();
            for pair in &sel.pairs {
                let t = pair.term * args.scale as u128;
                let x = corpus::random_divisor(&mut rng, t);
                b.push(u64::try_from(x)?);
                b.push(u64::try_from(t / x)?);
            }
            b.sort_unstable();
            b.dedup();
            b
        }
    };
    let verdict = verify_acyclicity_argument(&sel, args.scale, &base)?;
    let unique = sel.is_unique_divisor_family();
    let ok = unique && verdict.is_forest();
    let mut t = Table::new(
        "large-prime unique-divisor selection and acyclic containment graph",
        &[
            "r",
            "d",
            "N",
            "size",
            "pruned",
            "conflicts",
            "exceeds_sixth",
            "unique",
            "forest",
            "pairs",
            "ok",
        ],
    );
    t.note(format!(
        "seed={seed} scale={} base={}",
        args.scale,
        joined(&base)
    ));
    t.checked_row(
        ok,
        vec![
            args.r.to_string(),
            args.d.to_string(),
            args.len.to_string(),
            sel.size().to_string(),
            sel.pruned.to_string(),
            sel.conflicts.to_string(),
            flag(sel.exceeds_sixth()),
            flag(unique),
            flag(verdict.is_forest()),
            joined(sel.pairs.iter().map(|p| format!("{}:{}", p.prime, p.index))),
            flag(ok),
        ],
    );
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct Prop1Args {
    /// The set A.
    #[arg(long)]
    pub a: String,
    /// The set B.
    #[arg(long)]
    pub b: String,
    /// Size exponent: a / gcd(A) < N^k1.
    #[arg(long, default_value_t = 2.0)]
    pub k1: f64,
    /// Primes counted must be at least k2·N.
    #[arg(long, default_value_t = 0.5)]
    pub k2: f64,
}

fn prop1(args: &Prop1Args) -> anyhow::Result<Table> {
    let a = parse::u64_list(&args.a)?;
    let b = parse::u64_list(&args.b)?;
    let rep = proposition1_check(&a, &b, args.k1, args.k2)?;
    let mut t = Table::new(
        "product-set proposition: |B| against the large-prime count M",
        &[
            "N",
            "gcd",
            "size_hypothesis",
            "large_prime_count",
            "contained",
            "base_size",
            "ratio",
        ],
    );
    t.note(format!("k1={} k2={}", real(args.k1), real(args.k2)));
    t.row(vec![
        rep.len.to_string(),
        rep.gcd.to_string(),
        flag(rep.size_hypothesis),
        rep.large_prime_count.to_string(),
        flag(rep.contained),
        rep.base_size.to_string(),
        rep.ratio.map_or(String::new(), real),
    ]);
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// The set A; by default the longest progression in B.B.
    #[arg(long)]
    pub a: Option<String>,
    /// The set B; by default a seeded random set.
    #[arg(long)]
    pub b: Option<String>,
    /// Size of a random B.
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub max_elem: u64,
}

fn graph(args: &GraphArgs, seed: u64) -> anyhow::Result<Output> {
    let b = match &args.b {
        Some(b) => parse::u64_list(b)?,
        None => corpus::random_base(&mut corpus::rng(seed), args.n, args.max_elem),
    };
    let a: Vec<u128> = match &args.a {
        Some(a) => parse::u64_list(a)?.into_iter().map(u128::from).collect(),
        None => longest_ap_in_set(product_set(&b)?.elements())
            .context("empty product set")?
            .terms()
            .collect(),
    };
    let bw: Vec<u128> = b.iter().map(|&x| x as u128).collect();
    let g = build_graph(&a, &bw)?;
    Ok(Output {
        bytes: edgelist::write_edge_list(&g).into_bytes(),
        violations: usize::from(!g.accounting_holds()),
    })
}

#[derive(Debug, Clone, Args)]
pub struct CyclesArgs {
    /// Random instances in corpus mode.
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 60)]
    pub max_elem: u64,
    /// Longest cycle searched for in corpus mode.
    #[arg(long, default_value_t = 12)]
    pub max_len: usize,
    /// Rational part of r (`a` or `a/b`); selects the girth dichotomy mode.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Adds √D to r.
    #[arg(long, allow_hyphen_values = true)]
    pub sqrt: Option<i64>,
    /// Progression length for r + [N].
    #[arg(long = "N", default_value_t = 16)]
    pub len: u64,
    /// Cycle half-length k, i.e. ε = 1/k.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

fn cycles(args: &CyclesArgs, seed: u64) -> anyhow::Result<Table> {
    if args.r.is_some() || args.sqrt.is_some() {
        let r = parse::quadratic(args.r.as_deref(), args.sqrt)?;
        return girth_dichotomy(&r, args.len, args.k);
    }
    if args.n_min == 0 || args.n_min > args.n_max || args.n_max as u64 > args.max_elem {
        bail!("need 1 ≤ n-min ≤ n-max ≤ max-elem");
    }
    let mut rng = corpus::rng(seed);
    let instances: Vec<(Vec<u64>, Vec<u128>)> = (0..args.count)
        .map(|_| {
            use rand::Rng;
            let n = rng.random_range(args.n_min..=args.n_max);
            let b = corpus::random_base(&mut rng, n, args.max_elem);
            let elems = product_set(&b).expect("nonempty").elements().to_vec();
            let take = rng.random_range(1..=elems.len().min(3 * n));
            let mut a: Vec<u128> = rand::seq::index::sample(&mut rng, elems.len(), take)
                .into_iter()
                .map(|i| elems[i])
                .collect();
            a.sort_unstable();
            (b, a)
        })
        .collect();
    let mut t = Table::new(
        "shortest even cycles of containment graphs and the product identity along them",
        &[
            "instance",
            "base",
            "a_size",
            "vertices",
            "edges",
            "accounting",
            "cycle_len",
            "cycle_labels",
            "balanced",
            "ok",
        ],
    );
    t.note(format!("seed={seed} max_len={}", args.max_len));
    for (i, (b, a)) in instances.iter().enumerate() {
        let bw: Vec<u128> = b.iter().map(|&x| x as u128).collect();
        let g = build_graph(a, &bw)?;
        let cycle = find_shortest_even_cycle(&g, args.max_len)?;
        let balanced = cycle.as_ref().is_none_or(|c| g.cycle_labels_balance(c));
        let accounting = g.accounting_holds();
        let ok = balanced && accounting;
        t.checked_row(
            ok,
            vec![
                i.to_string(),
                joined(b),
                a.len().to_string(),
                g.vertex_count().to_string(),
                g.edge_count().to_string(),
                flag(accounting),
                cycle
                    .as_ref()
                    .map_or(String::new(), |c| c.len().to_string()),
                cycle.as_ref().map_or(String::new(), |c| {
                    joined(c.edges.iter().map(|&e| g.labels()[e]))
                }),
                flag(balanced),
                flag(ok),
            ],
        );
    }
    Ok(t)
}

fn girth_dichotomy(r: &QuadraticNumber, len: u64, k: usize) -> anyhow::Result<Table> {
    if k < 2 {
        bail!("--k must be at least 2");
    }
    let base = match vanishing_indices(r, len, k) {
        Some(idx) => cycle_instance(r, len, &idx)?,
        None => {
            let mut b = shifted_progression(r, len);
            b.push(QuadraticNumber::integer(1));
            b
        }
    };
    let rep = theorem2_analyze(r, len, &base, 1.0 / k as f64)?;
    let mut t = Table::new(
        "girth dichotomy for r + [N] in B.B: short cycle gives an integer relation, otherwise edge density",
        &[
            "r", "N", "k", "base_size", "vertices", "edges", "branch", "cycle_len", "indices",
            "polynomial", "vanishes", "degree", "height", "height_bound", "edge_ratio", "ok",
        ],
    );
    let head = vec![
        r.to_string(),
        len.to_string(),
        rep.k.to_string(),
        rep.base_size.to_string(),
        rep.vertices.to_string(),
        rep.edges.to_string(),
    ];
    let (ok, tail) = match &rep.branch {
        Theorem2Branch::Cycle(c) => {
            let ok = c.vanishes && c.within_bounds && c.degree < rep.k as usize;
            (
                ok,
                vec![
                    "cycle".to_string(),
                    c.cycle.len().to_string(),
                    joined(&c.indices),
                    c.polynomial.to_string(),
                    flag(c.vanishes),
                    c.degree.to_string(),
                    c.height.to_string(),
                    c.height_bound.to_string(),
                    String::new(),
                    flag(ok),
                ],
            )
        }
        Theorem2Branch::EdgeBound(e) => (
            true,
            vec![
                "edge-bound".to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                real(e.ratio),
                flag(true),
            ],
        ),
    };
    t.checked_row(ok, [head, tail].concat());
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct ChebArgs {
    /// Ascending coefficients, e.g. `1,0,1` for x² + 1.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    /// Scan primes p ≤ x.
    #[arg(long)]
    pub x: u64,
}

/// Per-prime records in ascending order and the summary report, scanned in
/// parallel chunks. Honors the sieve cache directory.
pub fn cheb_scan(
    poly: &IntPolynomial,
    x: u64,
) -> anyhow::Result<(Vec<PrimeRecord>, ChebotarevReport)> {
    if poly.degree().is_some_and(|d| d > MAX_EMPIRICS_DEGREE) {
        bail!("degree exceeds {MAX_EMPIRICS_DEGREE}");
    }
    let scan = PrimeScan::new(poly)?;
    let primes = cache::primes_upto(x, cache::cache_dir().as_deref());
    let records: Vec<PrimeRecord> = primes
        .primes()
        .par_chunks(2048)
        .flat_map_iter(|chunk| chunk.iter().map(|&p| scan.record(p)).collect::<Vec<_>>())
        .collect();
    let mut tally = PrimeTally::default();
    for r in &records {
        tally.add(r);
    }
    let report = scan.report(x, tally)?;
    Ok((records, report))
}

fn cheb(args: &ChebArgs) -> anyhow::Result<Table> {
    let poly = parse::polynomial(&args.poly)?;
    let (records, rep) = cheb_scan(&poly, args.x)?;
    let mut t = Table::new(
        "factorization types mod p (Frobenius cycle types) and Chebotarev densities",
        &["p", "ramified", "type", "has_root", "split"],
    );
    let ordered = rep.pi_split <= rep.pi_p && rep.pi_p <= rep.pi_total;
    let hist: usize = rep.type_histogram.values().sum();
    let consistent = ordered && hist + rep.ramified == rep.pi_total;
    t.note(format!("polynomial={} x={}", rep.polynomial, rep.limit));
    t.note(format!(
        "pi_P={} pi_split={} pi_total={} ramified={}",
        rep.pi_p, rep.pi_split, rep.pi_total, rep.ramified
    ));
    t.note(format!(
        "group_order_estimate={} li_x={} density={} root_fraction={} split_fraction={}",
        rep.group_order_estimate.map_or("inf".to_string(), real),
        real(rep.li_x),
        real(rep.density),
        real(rep.root_fraction()),
        real(rep.split_fraction()),
    ));
    for (ty, count) in &rep.type_histogram {
        t.note(format!("type {} count={count}", joined(ty)));
    }
    if !consistent {
        t.note("counts inconsistent: expected pi_split ≤ pi_P ≤ pi_total and histogram + ramified = pi_total");
    }
    for r in &records {
        t.checked_row(
            consistent,
            vec![
                r.p.to_string(),
                flag(r.ramified),
                joined(&r.degrees),
                flag(r.has_root),
                flag(r.split),
            ],
        );
    }
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct CoverArgs {
    #[arg(long = "N")]
    pub len: u64,
    /// Also report every N from this value up.
    #[arg(long)]
    pub from: Option<u64>,
}

fn cover(args: &CoverArgs) -> anyhow::Result<Table> {
    let start = args.from.unwrap_or(args.len);
    if start == 0 || start > args.len {
        bail!("need 1 ≤ from ≤ N");
    }
    let mut t = Table::new(
        "greedy set B with {1, …, N} ⊆ B.B",
        &["N", "size", "ratio", "base", "ok"],
    );
    for n in start..=args.len {
        let c = cover_search(n)?;
        let ok = contains_ap(&c.base, &NormalizedAP::new(1, 1, 1, n)?);
        t.checked_row(
            ok,
            vec![
                n.to_string(),
                c.base.len().to_string(),
                real(c.ratio),
                joined(&c.base),
                flag(ok),
            ],
        );
    }
    Ok(t)
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    /// N ≤ 36·k·n·ln n under d, r < N^k.
    #[arg(long, conflicts_with = "remark", required_unless_present = "remark")]
    pub lemma1: bool,
    /// Exponent 1 + ln ln n / √(ln n).
    #[arg(long)]
    pub remark: bool,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long)]
    pub n: u64,
    #[arg(long = "N", default_value_t = 1)]
    pub len: u64,
    #[arg(long, default_value_t = 1)]
    pub r: u64,
    #[arg(long, default_value_t = 1)]
    pub d: u64,
}

fn bounds(args: &BoundsArgs) -> anyhow::Result<Table> {
    if args.remark {
        let e = remark_bound(args.n)?;
        let mut t = Table::new(
            "explicit exponent 1 + ln ln n / √(ln n)",
            &["n", "exponent", "bound"],
        );
        t.row(vec![
            args.n.to_string(),
            real(e),
            real((args.n as f64).powf(e)),
        ]);
        return Ok(t);
    }
    let v = lemma1_bound_check(args.k, args.n, args.len, args.r, args.d)?;
    let mut t = Table::new(
        "progression length bound N ≤ 36·k·n·ln n when d, r < N^k",
        &[
            "k",
            "n",
            "N",
            "r",
            "d",
            "hypothesis",
            "conclusion",
            "bound",
            "degenerate_log",
        ],
    );
    t.row(vec![
        args.k.to_string(),
        args.n.to_string(),
        args.len.to_string(),
        args.r.to_string(),
        args.d.to_string(),
        flag(v.hypothesis_holds),
        flag(v.conclusion_holds),
        real(v.bound),
        flag(v.degenerate_log),
    ]);
    Ok(t)
}
