use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nl_core::analysis::{self, ScanReport};
use nl_core::inequalities::{self, Nl2Verdict};
use nl_core::newell_littlewood::{self as nl, HProfile};
use nl_core::polytope::NlPolytope;
use nl_core::symfunc::{self, Expansion, Term};
use nl_core::{KtExpansion, Partition};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "nl", version, about = "Newell-Littlewood numbers and Koike-Terada products")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel sections.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Formula,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    Saturation,
    Unimodality,
    Mf,
    Hahn,
    Shape,
    Meetjoin,
    Associativity,
}

#[derive(clap::Args)]
struct Triple {
    #[arg(short = 'm', value_parser = parse_partition)]
    mu: Partition,
    #[arg(short = 'n', value_parser = parse_partition)]
    nu: Partition,
    #[arg(short = 'l', value_parser = parse_partition)]
    lam: Partition,
}

#[derive(clap::Args)]
struct Pair {
    #[arg(short = 'm', value_parser = parse_partition)]
    mu: Partition,
    #[arg(short = 'n', value_parser = parse_partition)]
    nu: Partition,
}

#[derive(Subcommand)]
enum Command {
    /// N_{μ,ν,λ}.
    Compute(Triple),
    /// s_[μ] s_[ν] in the Koike-Terada basis.
    Product {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "formula")]
        via: Via,
    },
    /// Total coefficient of the product in each degree.
    Profile(Pair),
    /// Littlewood-Richardson coefficient c_{μ,ν}^λ.
    Lrcoef(Triple),
    /// s_[λ] in the Schur basis.
    Ktexpand {
        #[arg(short = 'l', value_parser = parse_partition)]
        lam: Partition,
    },
    /// Lattice points of the Newell-Littlewood polytope.
    Polytope {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 1)]
        dilate: u64,
        /// Print every lattice point.
        #[arg(long)]
        list: bool,
        /// Print the constraint system instead of counting.
        #[arg(long)]
        constraints: bool,
    },
    /// Horn index triples in dimension n.
    Horn {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        list: bool,
    },
    /// Horn (or extended Weyl) inequalities for a triple.
    CheckIneq {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        extended: bool,
        /// Defaults to one more than the longest partition.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Positivity test for partitions with at most two parts.
    Nl2(Triple),
    /// Sweep a property over all small inputs.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        #[arg(long, default_value_t = 5)]
        max_size: u64,
        #[arg(long, default_value_t = 3)]
        max_k: u64,
    },
    /// k ↦ N_{kμ,kν,kλ} for k = 1..K.
    Nlfun {
        #[command(flatten)]
        triple: Triple,
        #[arg(short = 'K', default_value_t = 8)]
        max_k: u64,
    },
    /// Rank of the products s_[λ] s_[λ^∨] over an a × b box.
    Kleber {
        #[arg(short = 'a')]
        rows: usize,
        #[arg(short = 'b')]
        cols: u64,
    },
    /// Triples (α, β, γ) contributing to N_{μ,ν,λ}.
    Witnesses(Triple),
    /// μ with c_{μ,μ}^λ > 0, and the tableau proving it.
    Detect {
        #[arg(short = 'l', value_parser = parse_partition)]
        lam: Partition,
    },
    /// s_[μ] s_[(p)] by strip removal and addition.
    Pieri {
        #[arg(short = 'm', value_parser = parse_partition)]
        mu: Partition,
        #[arg(short = 'p')]
        p: u64,
    },
    /// Oscillating walks of length k from ∅ to λ.
    Oscillating {
        #[arg(short = 'l', value_parser = parse_partition)]
        lam: Partition,
        #[arg(short = 'k')]
        k: u64,
    },
    /// Products after replacing (μ, ν) by meet/join, halves and sorted parts.
    Meetjoin(Pair),
    /// Candidate closed forms for ((2,1,1),(2,1,1),(1,1,1,1)).
    Hypotheses {
        #[arg(long, default_value_t = 4)]
        max_k: u64,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

enum Outcome {
    Ok,
    Negative,
    Usage(String),
}

struct Out {
    json: bool,
}

impl Out {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            let v = serde_json::to_value(value).expect("serializable");
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        } else {
            let t = text();
            if !t.is_empty() {
                println!("{t}");
            }
        }
    }
}

fn expansion_json<B: symfunc::Basis>(e: &Expansion<B>) -> Vec<Term> {
    e.terms()
}

fn scan_text(r: &ScanReport) -> String {
    let mut lines = vec![format!("scan: {}", r.scan)];
    for (k, v) in &r.parameters {
        lines.push(format!("{k}: {v}"));
    }
    lines.push(format!("checked: {}", r.checked));
    lines.push(format!("counterexamples: {}", r.counterexamples.len()));
    for c in &r.counterexamples {
        lines.push(format!(
            "  {} observed {} expected {}",
            inputs(&c.input),
            c.observed,
            c.expected
        ));
    }
    if !r.flagged.is_empty() {
        lines.push(format!("flagged: {}", r.flagged.len()));
        for c in &r.flagged {
            lines.push(format!(
                "  {} observed {} expected {}",
                inputs(&c.input),
                c.observed,
                c.expected
            ));
        }
    }
    lines.push(if r.passed() { "result: PASS" } else { "result: FAIL" }.to_string());
    lines.join("\n")
}

fn inputs(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

fn profile_text(p: &HProfile) -> String {
    let vals = p.values.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    format!(
        "h: {vals}\nunimodal: {}\nlog-concave: {}",
        p.is_unimodal(),
        p.is_log_concave()
    )
}

fn product(pair: &Pair, via: Via) -> Result<KtExpansion, String> {
    match via {
        Via::Formula => Ok(nl::nl_product(&pair.mu, &pair.nu)),
        Via::Schur => symfunc::kt_product_via_schur(&pair.mu, &pair.nu).map_err(|e| e.to_string()),
    }
}

fn permutations(t: &Triple) -> [[&Partition; 3]; 6] {
    let (a, b, c) = (&t.mu, &t.nu, &t.lam);
    [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
}

fn run(cli: Cli) -> Outcome {
    let out = Out { json: cli.json };
    match cli.command {
        Command::Compute(t) => {
            let v = nl::nl_number(&t.mu, &t.nu, &t.lam);
            out.emit(&json!({"mu": t.mu, "nu": t.nu, "lambda": t.lam, "value": v}), || {
                v.to_string()
            });
        }
        Command::Product { pair, via } => match product(&pair, via) {
            Ok(e) => out.emit(
                &json!({"mu": pair.mu, "nu": pair.nu, "terms": expansion_json(&e)}),
                || e.to_string(),
            ),
            Err(msg) => {
                eprintln!("{msg}");
                return Outcome::Negative;
            }
        },
        Command::Profile(pair) => {
            let p = nl::h_profile(&pair.mu, &pair.nu);
            out.emit(
                &json!({
                    "mu": p.mu, "nu": p.nu, "values": p.values,
                    "unimodal": p.is_unimodal(), "log_concave": p.is_log_concave(),
                }),
                || profile_text(&p),
            );
        }
        Command::Lrcoef(t) => {
            let v = nl_core::lr_coefficient(&t.mu, &t.nu, &t.lam);
            out.emit(&json!({"mu": t.mu, "nu": t.nu, "lambda": t.lam, "value": v}), || {
                v.to_string()
            });
        }
        Command::Ktexpand { lam } => {
            let e = symfunc::kt_to_schur(&lam);
            out.emit(&json!({"lambda": lam, "terms": expansion_json(&e)}), || e.to_string());
        }
        Command::Polytope {
            triple: t,
            dim,
            dilate,
            list,
            constraints,
        } => {
            let base = match dim {
                Some(n) => match NlPolytope::build(&t.mu, &t.nu, &t.lam, n) {
                    Ok(p) => p,
                    Err(e) => return Outcome::Usage(e.to_string()),
                },
                None => NlPolytope::build_default(&t.mu, &t.nu, &t.lam),
            };
            let poly = match base.dilate(dilate) {
                Ok(p) => p,
                Err(e) => return Outcome::Usage(e.to_string()),
            };
            if constraints {
                print!("{}", poly.dump_constraints());
                return Outcome::Ok;
            }
            if list {
                let points = poly.enumerate_lattice_points();
                out.emit(
                    &json!({"dim": poly.n(), "dilate": dilate, "count": points.len(), "points": points}),
                    || {
                        let mut lines = vec![format!("count: {}", points.len())];
                        lines.extend(points.iter().map(|p| p.to_string()));
                        lines.join("\n")
                    },
                );
            } else {
                let c = poly.count_lattice_points();
                out.emit(&json!({"dim": poly.n(), "dilate": dilate, "count": c}), || {
                    c.to_string()
                });
            }
        }
        Command::Horn { dim, list } => {
            let triples = inequalities::horn_triples(dim);
            if list {
                out.emit(&*triples, || {
                    triples.iter().map(|h| h.to_string()).collect::<Vec<_>>().join("\n")
                });
            } else {
                out.emit(&json!({"dim": dim, "count": triples.len()}), || {
                    triples.len().to_string()
                });
            }
        }
        Command::CheckIneq {
            triple: t,
            extended,
            dim,
        } => {
            let n = dim.unwrap_or_else(|| t.mu.len().max(t.nu.len()).max(t.lam.len()) + 1);
            let family = if extended { "extended-weyl" } else { "horn" };
            let ok = if extended {
                inequalities::extended_weyl_holds(&t.mu, &t.nu, &t.lam, n)
            } else {
                inequalities::horn_holds(&t.mu, &t.nu, &t.lam, n)
            };
            let mut violated = None;
            if !ok && !extended {
                violated = permutations(&t).iter().find_map(|[a, b, c]| {
                    inequalities::first_horn_violation(a, b, c, n).map(|h| format!("{h} at (μ,ν,λ) = ({a},{b},{c})"))
                });
            }
            out.emit(
                &json!({"family": family, "dim": n, "holds": ok, "violated": violated}),
                || format!("{family}: {}", if ok { "holds" } else { "violated" }),
            );
            if let Some(v) = &violated {
                eprintln!("{v}");
            }
            if !ok {
                return Outcome::Negative;
            }
        }
        Command::Nl2(t) => match inequalities::nl2_check(&t.mu, &t.nu, &t.lam) {
            Ok(Nl2Verdict::Member) => out.emit(&json!({"member": true}), || "member".to_string()),
            Ok(Nl2Verdict::Violated(name)) => {
                out.emit(&json!({"member": false, "violated": name}), || "non-member".to_string());
                eprintln!("violated: {name}");
                return Outcome::Negative;
            }
            Err(e) => return Outcome::Usage(e.to_string()),
        },
        Command::Scan { kind, max_size, max_k } => {
            let r = match kind {
                ScanKind::Saturation => analysis::check_saturation(max_size, max_k),
                ScanKind::Unimodality => analysis::check_unimodality(max_size),
                ScanKind::Mf => analysis::check_multiplicity_free(max_size),
                ScanKind::Hahn => analysis::check_hahn(max_size),
                ScanKind::Shape => analysis::check_shape(max_size),
                ScanKind::Meetjoin => analysis::check_meetjoin(max_size),
                ScanKind::Associativity => analysis::check_associativity(max_size),
            };
            out.emit(&r, || scan_text(&r));
            if !r.passed() {
                return Outcome::Negative;
            }
        }
        Command::Nlfun { triple: t, max_k } => {
            let s = analysis::nl_function(&t.mu, &t.nu, &t.lam, max_k);
            out.emit(&s, || s.values.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
        }
        Command::Kleber { rows, cols } => {
            let r = analysis::kleber_rank(rows, cols);
            out.emit(&r, || {
                let mut lines: Vec<String> = r.pairs.iter().map(|(x, y)| format!("{x} {y}")).collect();
                lines.push(format!("pairs: {}", r.pair_count));
                lines.push(format!("rank: {}", r.rank));
                lines.push(format!("independent: {}", r.independent()));
                lines.join("\n")
            });
        }
        Command::Witnesses(t) => {
            let ws = nl::nl_witnesses(&t.mu, &t.nu, &t.lam);
            out.emit(&ws, || {
                ws.iter()
                    .map(|w| format!("{} {} {} {}", w.alpha, w.beta, w.gamma, w.multiplicity))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Detect { lam } => {
            let (mu, filling) = match (nl::detection_witness(&lam), nl::detection_filling(&lam)) {
                (Ok(m), Ok(f)) => (m, f),
                (Err(e), _) | (_, Err(e)) => return Outcome::Usage(e.to_string()),
            };
            let rows: Vec<Vec<u32>> = filling.rows().to_vec();
            out.emit(&json!({"lambda": lam, "mu": mu, "filling": rows}), || {
                let mut lines = vec![format!("mu: {mu}")];
                for (i, r) in rows.iter().enumerate() {
                    let skip = mu.part(i) as usize;
                    let cells: Vec<String> = std::iter::repeat_n(".".to_string(), skip)
                        .chain(r.iter().map(u32::to_string))
                        .collect();
                    lines.push(cells.join(" "));
                }
                lines.join("\n")
            });
        }
        Command::Pieri { mu, p } => {
            let e = nl::nl_pieri(&mu, p);
            out.emit(&json!({"mu": mu, "p": p, "terms": expansion_json(&e)}), || {
                e.to_string()
            });
        }
        Command::Oscillating { lam, k } => {
            let c = nl::oscillating_count(&lam, k);
            out.emit(&json!({"lambda": lam, "k": k, "count": c}), || c.to_string());
        }
        Command::Meetjoin(pair) => {
            let d = analysis::meetjoin_differences(&pair.mu, &pair.nu);
            let entries: Vec<(&str, &KtExpansion)> = d.all().to_vec();
            let v: serde_json::Map<String, Value> = entries
                .iter()
                .map(|(name, e)| (name.to_string(), json!(expansion_json(e))))
                .collect();
            out.emit(&v, || {
                entries
                    .iter()
                    .map(|(name, e)| format!("{name}: {e}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            if entries.iter().any(|(_, e)| !e.is_nonnegative()) {
                return Outcome::Negative;
            }
        }
        Command::Hypotheses { max_k } => {
            let hs = analysis::check_polynomial_hypotheses(max_k);
            out.emit(&hs, || {
                hs.iter()
                    .map(|h| {
                        let show = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
                        format!(
                            "{}: {}\n  sampled:   {}\n  predicted: {}",
                            h.name,
                            if h.confirmed { "confirmed" } else { "refuted" },
                            show(&h.sampled),
                            show(&h.predicted)
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
    }
    Outcome::Ok
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Outcome::Ok => ExitCode::SUCCESS,
        Outcome::Negative => ExitCode::from(1),
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
