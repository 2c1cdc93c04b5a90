//! Exhaustive experiment driver.
//!
//! Every labelled connected bipartite graph up to a size bound is pushed
//! through decompose, verify, shell and purity checks, and cross-checked
//! against the brute-force oracle up to a smaller bound. Complete bipartite
//! graphs, even cycles and a seeded sample of larger random graphs are
//! added on top, along with a negative control that must be rejected.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::decompose::{
    decompose_bipartite_complement, is_shelling_order, shelling_from_certificate,
    verify_certificate, Rule,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::shedding::BruteForceOracle;

pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Largest `n` whose labelled graphs fit the 64-bit edge masks used for
/// enumeration.
pub const MAX_ENUMERATION_N: usize = 11;

/// Unordered pairs of `0..n` in lexicographic order; bit `i` of an edge
/// mask refers to pair `i`.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = edge_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// Bitwise BFS two-colouring from vertex 0; true iff every vertex is
/// reached and no edge joins two vertices of one colour.
fn mask_is_connected_bipartite(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u64; MAX_ENUMERATION_N];
    let mut bits = mask;
    while bits != 0 {
        let (u, v) = pairs[bits.trailing_zeros() as usize];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        bits &= bits - 1;
    }
    let all = (1u64 << n) - 1;
    let mut sides = [1u64, 0u64];
    let mut seen = 1u64;
    let mut frontier = 1u64;
    let mut colour = 0;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        if next & sides[colour] != 0 {
            return false;
        }
        colour ^= 1;
        frontier = next & !seen;
        sides[colour] |= frontier;
        seen |= frontier;
    }
    seen == all
}

/// Edge masks of the labelled connected bipartite graphs on `n` vertices
/// whose mask lies in `range`, ascending.
fn connected_bipartite_masks(n: usize, range: std::ops::Range<u64>) -> impl Iterator<Item = u64> {
    let pairs = edge_pairs(n);
    range.filter(move |&m| mask_is_connected_bipartite(n, &pairs, m))
}

/// Every labelled connected bipartite graph on exactly `n` vertices, once,
/// in increasing edge-mask order. Panics unless `1 <= n <= 11`.
pub fn enumerate_connected_bipartite(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=MAX_ENUMERATION_N).contains(&n),
        "enumeration supports 1..={MAX_ENUMERATION_N} vertices, got {n}"
    );
    let total = 1u64 << (n * (n - 1) / 2);
    connected_bipartite_masks(n, 0..total).map(move |m| graph_from_mask(n, m))
}

/// Parameters that shape the report. Everything here is echoed into it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub oracle_max_n: usize,
    pub seed: u64,
    /// Random connected bipartite graphs on `2..=random_max_n` vertices.
    pub random_samples: usize,
    pub random_max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 8,
            oracle_max_n: 7,
            seed: 0,
            random_samples: 64,
            random_max_n: 24,
        }
    }
}

/// Execution knobs that must not change the report's content.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; 0 picks the machine default.
    pub jobs: usize,
    /// Adds per-stage wall times to the report, making it non-reproducible.
    pub record_timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Decompose,
    Verify,
    Shelling,
    Purity,
    Oracle,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCounters {
    pub graphs_tested: u64,
    pub certificates_verified: u64,
    pub shellings_verified: u64,
    pub purity_confirmed: u64,
    /// Graphs small enough for the oracle.
    pub oracle_tested: u64,
    pub oracle_agreements: u64,
    pub rule_histogram: BTreeMap<Rule, u64>,
}

impl StageCounters {
    pub fn merge(&mut self, other: &StageCounters) {
        self.graphs_tested += other.graphs_tested;
        self.certificates_verified += other.certificates_verified;
        self.shellings_verified += other.shellings_verified;
        self.purity_confirmed += other.purity_confirmed;
        self.oracle_tested += other.oracle_tested;
        self.oracle_agreements += other.oracle_agreements;
        for (rule, count) in &other.rule_histogram {
            *self.rule_histogram.entry(*rule).or_default() += count;
        }
    }

    /// Every stage succeeded on every graph it saw.
    pub fn all_passed(&self) -> bool {
        self.certificates_verified == self.graphs_tested
            && self.shellings_verified == self.graphs_tested
            && self.purity_confirmed == self.graphs_tested
            && self.oracle_agreements == self.oracle_tested
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeReport {
    pub n: usize,
    #[serde(flatten)]
    pub counters: StageCounters,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub name: String,
    pub vertex_count: usize,
    #[serde(flatten)]
    pub counters: StageCounters,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    /// Enumerated size, family name or `random`.
    pub group: String,
    /// `n: u-v u-v ...`
    pub graph: String,
    pub stage: Stage,
    pub reason: String,
}

/// A check that is supposed to fail, and what it did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedNegative {
    pub name: String,
    pub graph: String,
    pub stage: Stage,
    pub rejected: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format_version: u32,
    pub config: SuiteConfig,
    pub sizes: Vec<SizeReport>,
    pub families: Vec<FamilyReport>,
    pub random: StageCounters,
    pub expected_negatives: Vec<ExpectedNegative>,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<Stage, f64>>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Totals over the exhaustive sizes.
    pub fn exhaustive_totals(&self) -> StageCounters {
        let mut total = StageCounters::default();
        for s in &self.sizes {
            total.merge(&s.counters);
        }
        total
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn graph_label(g: &Graph) -> String {
    let mut s = format!("{}:", g.vertex_count());
    for (u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}

#[derive(Default)]
struct Tally {
    counters: StageCounters,
    failures: Vec<Failure>,
    times: BTreeMap<Stage, Duration>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.counters.merge(&other.counters);
        self.failures.extend(other.failures);
        for (stage, t) in other.times {
            *self.times.entry(stage).or_default() += t;
        }
        self
    }
}

struct Pipeline<'a> {
    group: String,
    oracle: Option<&'a mut BruteForceOracle>,
    timed: bool,
}

impl Pipeline<'_> {
    fn timed<T>(&self, tally: &mut Tally, stage: Stage, f: impl FnOnce() -> T) -> T {
        if !self.timed {
            return f();
        }
        let start = Instant::now();
        let out = f();
        *tally.times.entry(stage).or_default() += start.elapsed();
        out
    }

    /// Runs every stage on `g`, recording successes and failures.
    fn run(&mut self, g: &Graph, tally: &mut Tally) {
        tally.counters.graphs_tested += 1;
        let fail = |tally: &mut Tally, stage: Stage, reason: String| {
            tally.failures.push(Failure {
                group: self.group.clone(),
                graph: graph_label(g),
                stage,
                reason,
            })
        };

        let complex = SimplicialComplex::independence_complex(&g.complement());

        let expected_dim = if g.vertex_count() >= 2 {
            1
        } else {
            g.vertex_count() as isize - 1
        };
        let pure = self.timed(tally, Stage::Purity, || {
            complex.is_pure() && complex.dimension() == expected_dim
        });
        if pure {
            tally.counters.purity_confirmed += 1;
        } else {
            fail(
                tally,
                Stage::Purity,
                format!(
                    "pure={} dimension={} expected {expected_dim}",
                    complex.is_pure(),
                    complex.dimension()
                ),
            );
        }

        if let Some(oracle) = self.oracle.as_deref_mut() {
            tally.counters.oracle_tested += 1;
            let start = self.timed.then(Instant::now);
            let decomposable = oracle.decide(&complex);
            if let Some(start) = start {
                *tally.times.entry(Stage::Oracle).or_default() += start.elapsed();
            }
            if decomposable {
                tally.counters.oracle_agreements += 1;
            } else {
                fail(
                    tally,
                    Stage::Oracle,
                    "oracle found no vertex decomposition".into(),
                );
            }
        }

        let cert = match self.timed(tally, Stage::Decompose, || {
            decompose_bipartite_complement(g)
        }) {
            Ok(cert) => cert,
            Err(e) => {
                fail(tally, Stage::Decompose, e.to_string());
                return;
            }
        };
        cert.count_rules(&mut tally.counters.rule_histogram);

        match self.timed(tally, Stage::Verify, || verify_certificate(&complex, &cert)) {
            Ok(()) => tally.counters.certificates_verified += 1,
            Err(e) => {
                fail(tally, Stage::Verify, e.to_string());
                return;
            }
        }

        let shelled = self.timed(tally, Stage::Shelling, || {
            shelling_from_certificate(&complex, &cert)
                .and_then(|order| is_shelling_order(&complex, &order))
        });
        match shelled {
            Ok(true) => tally.counters.shellings_verified += 1,
            Ok(false) => fail(
                tally,
                Stage::Shelling,
                "induced order is not a shelling".into(),
            ),
            Err(e) => fail(tally, Stage::Shelling, e.to_string()),
        }
    }
}

fn tally_size(n: usize, config: &SuiteConfig, timed: bool) -> Tally {
    let m = n * (n - 1) / 2;
    let total = 1u64 << m;
    let chunk = 1u64 << m.min(14);
    let use_oracle = n <= config.oracle_max_n;
    (0..total / chunk)
        .into_par_iter()
        .map_init(BruteForceOracle::new, |oracle, block| {
            let mut tally = Tally::default();
            let mut pipeline = Pipeline {
                group: format!("n={n}"),
                oracle: use_oracle.then_some(oracle),
                timed,
            };
            for mask in connected_bipartite_masks(n, block * chunk..(block + 1) * chunk) {
                pipeline.run(&graph_from_mask(n, mask), &mut tally);
            }
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

/// `K_{a,b}` for `1 <= a, b <= 5` and `C_{2k}` for `2 <= k <= 5`.
pub fn fixed_families() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for a in 1..=5 {
        for b in 1..=5 {
            out.push((format!("K_{{{a},{b}}}"), Graph::complete_bipartite(a, b)));
        }
    }
    for k in 2..=5 {
        out.push((format!("C_{}", 2 * k), Graph::cycle(2 * k)));
    }
    out
}

/// A connected bipartite graph with both parts non-empty: a random spanning
/// tree across the parts, extra cross edges with probability 0.3, then a
/// random relabelling.
pub fn random_connected_bipartite(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 2);
    let left = rng.gen_range(1..n);
    let is_left = |v: usize| v < left;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    // put one vertex of each part first so every later vertex has a partner
    let first_left = order.iter().position(|&v| is_left(v)).unwrap();
    order.swap(0, first_left);
    let first_right = order.iter().position(|&v| !is_left(v)).unwrap();
    order.swap(1, first_right);

    let mut edges = vec![(order[0], order[1])];
    for i in 2..n {
        let v = order[i];
        let partners: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| is_left(u) != is_left(v))
            .collect();
        edges.push((v, *partners.choose(rng).unwrap()));
    }
    for u in 0..left {
        for v in left..n {
            if rng.gen_bool(0.3) && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
                edges.push((u, v));
            }
        }
    }
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let edges: Vec<_> = edges
        .iter()
        .map(|&(u, v)| (relabel[u], relabel[v]))
        .collect();
    Graph::from_edges(n, &edges).expect("labels in range")
}

fn negative_controls(oracle: &mut BruteForceOracle) -> (Vec<ExpectedNegative>, Vec<Failure>) {
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).expect("valid");
    let label = graph_label(&two_k2);
    let complex = SimplicialComplex::independence_complex(&two_k2.complement());

    let decides = oracle.decide(&complex);
    let oracle_check = ExpectedNegative {
        name: "2K_2".into(),
        graph: label.clone(),
        stage: Stage::Oracle,
        rejected: !decides,
        detail: if decides {
            "oracle accepted".into()
        } else {
            "oracle found no vertex decomposition".into()
        },
    };
    let decompose_check = match decompose_bipartite_complement(&two_k2) {
        Err(e @ Error::Disconnected { .. }) => ExpectedNegative {
            name: "2K_2".into(),
            graph: label.clone(),
            stage: Stage::Decompose,
            rejected: true,
            detail: e.to_string(),
        },
        other => ExpectedNegative {
            name: "2K_2".into(),
            graph: label.clone(),
            stage: Stage::Decompose,
            rejected: false,
            detail: format!("{other:?}"),
        },
    };
    let checks = vec![oracle_check, decompose_check];
    let failures = checks
        .iter()
        .filter(|c| !c.rejected)
        .map(|c| Failure {
            group: "negative-control".into(),
            graph: c.graph.clone(),
            stage: c.stage,
            reason: format!("expected rejection, got: {}", c.detail),
        })
        .collect();
    (checks, failures)
}

/// Runs the whole suite. Reports are byte-identical for equal configs
/// (unless timings are requested) whatever the number of jobs.
pub fn run_suite(config: &SuiteConfig, options: RunOptions) -> Result<Report> {
    if config.oracle_max_n > config.max_n {
        return Err(Error::InvalidConfig(format!(
            "oracle_max_n {} exceeds max_n {}",
            config.oracle_max_n, config.max_n
        )));
    }
    if config.max_n == 0 || config.max_n > MAX_ENUMERATION_N {
        return Err(Error::InvalidConfig(format!(
            "max_n must lie in 1..={MAX_ENUMERATION_N}"
        )));
    }
    if config.random_samples > 0 && !(2..=64).contains(&config.random_max_n) {
        return Err(Error::InvalidConfig(
            "random_max_n must lie in 2..=64".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let timed = options.record_timings;
    pool.install(|| {
        let mut failures = Vec::new();
        let mut times: BTreeMap<Stage, Duration> = BTreeMap::new();
        let mut absorb = |tally: Tally, failures: &mut Vec<Failure>| {
            failures.extend(tally.failures);
            for (stage, t) in tally.times {
                *times.entry(stage).or_default() += t;
            }
            tally.counters
        };

        let mut sizes = Vec::new();
        for n in 1..=config.max_n {
            let counters = absorb(tally_size(n, config, timed), &mut failures);
            sizes.push(SizeReport { n, counters });
        }

        let mut oracle = BruteForceOracle::new();
        let mut families = Vec::new();
        for (name, g) in fixed_families() {
            let mut tally = Tally::default();
            let use_oracle = g.vertex_count() <= config.oracle_max_n;
            Pipeline {
                group: name.clone(),
                oracle: use_oracle.then_some(&mut oracle),
                timed,
            }
            .run(&g, &mut tally);
            families.push(FamilyReport {
                name,
                vertex_count: g.vertex_count(),
                counters: absorb(tally, &mut failures),
            });
        }

        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let samples: Vec<Graph> = (0..config.random_samples)
            .map(|_| {
                let n = rng.gen_range(2..=config.random_max_n);
                random_connected_bipartite(&mut rng, n)
            })
            .collect();
        let random_tally = samples
            .par_iter()
            .map_init(BruteForceOracle::new, |oracle, g| {
                let mut tally = Tally::default();
                let use_oracle = g.vertex_count() <= config.oracle_max_n;
                Pipeline {
                    group: "random".into(),
                    oracle: use_oracle.then_some(oracle),
                    timed,
                }
                .run(g, &mut tally);
                tally
            })
            .reduce(Tally::default, Tally::merge);
        let random = absorb(random_tally, &mut failures);

        let (expected_negatives, negative_failures) = negative_controls(&mut oracle);
        failures.extend(negative_failures);
        failures.sort();

        Ok(Report {
            format_version: REPORT_FORMAT_VERSION,
            config: config.clone(),
            sizes,
            families,
            random,
            expected_negatives,
            failures,
            timings_ms: timed.then(|| {
                times
                    .into_iter()
                    .map(|(stage, t)| (stage, t.as_secs_f64() * 1e3))
                    .collect()
            }),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count: build each labelled graph and ask the graph
    /// module, with no bit tricks.
    fn brute_count(n: usize) -> usize {
        let m = n * (n - 1) / 2;
        (0u64..1 << m)
            .filter(|&mask| {
                let g = graph_from_mask(n, mask);
                g.is_connected() && g.is_bipartite()
            })
            .count()
    }

    #[test]
    fn enumeration_counts() {
        let expected = [1, 1, 3, 19, 195, 3031, 67263];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(brute_count(n), want, "oracle count n={n}");
            assert_eq!(enumerate_connected_bipartite(n).count(), want, "n={n}");
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let one: Vec<_> = enumerate_connected_bipartite(1).collect();
        assert_eq!(one, vec![Graph::new(1).unwrap()]);
        let two: Vec<_> = enumerate_connected_bipartite(2).collect();
        assert_eq!(two, vec![Graph::path(2)]);
        let three: Vec<_> = enumerate_connected_bipartite(3).collect();
        assert_eq!(three.len(), 3);
        assert!(three.iter().all(|g| g.edge_count() == 2));
        let mut distinct = three.clone();
        distinct.dedup();
        assert_eq!(distinct.len(), 3);
    }

    #[test]
    fn random_graphs_are_connected_bipartite() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..=20);
            let g = random_connected_bipartite(&mut rng, n);
            assert_eq!(g.vertex_count(), n);
            assert!(g.is_connected() && g.is_bipartite(), "{g:?}");
        }
    }

    #[test]
    fn small_suite_passes_and_is_consistent() {
        let config = SuiteConfig {
            max_n: 5,
            oracle_max_n: 5,
            seed: 3,
            random_samples: 8,
            random_max_n: 12,
        };
        let report = run_suite(&config, RunOptions::default()).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        for s in &report.sizes {
            assert!(s.counters.all_passed());
            assert_eq!(s.counters.oracle_tested, s.counters.graphs_tested);
        }
        assert_eq!(
            report
                .sizes
                .iter()
                .map(|s| s.counters.graphs_tested)
                .collect::<Vec<_>>(),
            vec![1, 1, 3, 19, 195]
        );
        assert!(report.families.iter().all(|f| f.counters.all_passed()));
        assert_eq!(report.families.len(), 29);
        assert_eq!(report.random.graphs_tested, 8);
        assert!(report.expected_negatives.iter().all(|e| e.rejected));
        assert!(report.timings_ms.is_none());
    }

    #[test]
    fn report_independent_of_job_count() {
        let config = SuiteConfig {
            max_n: 5,
            oracle_max_n: 4,
            seed: 11,
            random_samples: 6,
            random_max_n: 10,
        };
        let one = run_suite(
            &config,
            RunOptions {
                jobs: 1,
                record_timings: false,
            },
        )
        .unwrap();
        let many = run_suite(
            &config,
            RunOptions {
                jobs: 4,
                record_timings: false,
            },
        )
        .unwrap();
        assert_eq!(one.to_json(), many.to_json());
    }

    #[test]
    fn timings_are_opt_in() {
        let config = SuiteConfig {
            max_n: 3,
            oracle_max_n: 3,
            seed: 0,
            random_samples: 0,
            random_max_n: 2,
        };
        let report = run_suite(
            &config,
            RunOptions {
                jobs: 1,
                record_timings: true,
            },
        )
        .unwrap();
        let timings = report.timings_ms.unwrap();
        assert!(timings.contains_key(&Stage::Verify));
    }

    #[test]
    fn config_validation() {
        let bad = SuiteConfig {
            max_n: 4,
            oracle_max_n: 5,
            ..SuiteConfig::default()
        };
        assert!(matches!(
            run_suite(&bad, RunOptions::default()),
            Err(Error::InvalidConfig(_))
        ));
        let too_big = SuiteConfig {
            max_n: 12,
            oracle_max_n: 3,
            ..SuiteConfig::default()
        };
        assert!(run_suite(&too_big, RunOptions::default()).is_err());
    }

    #[test]
    fn counter_merge_is_associative_and_commutative() {
        let mut a = StageCounters {
            graphs_tested: 3,
            certificates_verified: 2,
            ..Default::default()
        };
        a.rule_histogram.insert(Rule::FreeVertex, 4);
        let mut b = StageCounters {
            graphs_tested: 5,
            oracle_tested: 1,
            ..Default::default()
        };
        b.rule_histogram.insert(Rule::CliqueUnion, 2);
        b.rule_histogram.insert(Rule::FreeVertex, 1);
        let mut ab = a.clone();
        ab.merge(&b);
        let mut ba = b.clone();
        ba.merge(&a);
        assert_eq!(ab, ba);
        assert_eq!(ab.rule_histogram[&Rule::FreeVertex], 5);
    }
}
