//! Command-line front end.
//!
//! Every subcommand takes `--output json|text` (default `json`). JSON output
//! is an object with sorted keys: `schema` (always `"factroid/1"`),
//! `invocation` (the argument vector, enough to replay the call) and either
//! `result` or `error` (`{category, message}`).
//!
//! Exit codes: 0 on success, 1 for malformed input and domain errors, 2 when
//! a budget or search bound is exhausted (including an Egyptian or
//! G-membership search that finds no witness).
//!
//! Elements are written in the ring's own syntax and separated by `;` or
//! `,`; `--gens -` reads the list from standard input, one or more per line.
//!
//! | subcommand | input | output |
//! |---|---|---|
//! | `closure` | `--ring --mulset --gens [--bound] [--trace]` | basis, dim, iterations, degree bound |
//! | `saturate` | `--ring --mulset --gens [--bound]` | the saturated set |
//! | `wof` | `--ring --gens [--close --mulset] [--bound]` | `W(F)` |
//! | `aof` | `--ring --gens [--close --mulset] [--bound]` | `A(F)` |
//! | `colon` | `--ring --gens --by [--close --mulset] [--bound]` | `(F : T)` |
//! | `check` | `--ring --mulset --gens [--bound]` | whether the span is a factroid |
//! | `egyptian` | `--ring --mulset --num --den [--max-witness-degree]` | membership of `num/den` |
//! | `greedy` | `--rational a/b [--distinct]` | unit-fraction denominators |
//! | `gmember` | `--ring --mulset --gens --element [--max-witness-degree]` | `x ∈ G^W(S)` search |
//! | `tregular` | `--ring --mulset --gens --by [--close] [--bound]` | regularity and counterexample |
//! | `classify` | `--ring [--depth --bound]` | unit-additive / sublocalizable report |
//! | `euclid` | `--ring [--bound]` | factroids of a Euclidean ring |
//! | `oracle enumerate` | `--ring --mulset [--bound] [--subgroups]` | brute-force enumeration |
//! | `oracle closure` | `--ring --mulset --gens [--bound] [--compare]` | brute-force closure |
//! | `oracle fuzz` | `--ring --mulset [--bound] [--cases --seed]` | random engine/oracle comparisons |

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::classify::{classify, euclidean_factroids, ua_chain};
use crate::error::{Error, Result};
use crate::factroid::{a_of, closure, colon_by_set, is_factroid, saturate, w_of};
use crate::oracle::{enumerate_factroids, enumerate_subgroups, naive_closure, naive_closure_int, EnumerationBudget, Universe};
use crate::regular_egyptian::{egyptian_decide, g_membership, greedy_unit_fractions, parse_rational, t_regular_check, witness_verify};
use crate::rings::mulset::MultSet;
use crate::rings::parse::{parse_element, parse_element_list, parse_ring};
use crate::rings::{RingElement, RingSpec};
use crate::subspace::SubgroupRep;

pub const SCHEMA: &str = "factroid/1";

#[derive(Parser, Debug)]
#[command(name = "factroid", version, about = "Exact computation of factroids of commutative rings")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputMode::Json, global = true)]
    pub output: OutputMode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    /// `Z`, `Z/n`, `GF(p)`, `GF(p)[x,y,...]` or `(A)x(B)`.
    #[arg(long)]
    pub ring: String,
    /// `reg`, `units`, `evendeg`, `gen:{...}`, `explicit:{...}` or `compl:{...}`.
    #[arg(long, default_value = "reg")]
    pub mulset: String,
}

#[derive(Args, Debug, Clone)]
pub struct SubgroupArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    /// Generators, separated by `;` or `,`; `-` reads standard input.
    #[arg(long, default_value = "")]
    pub gens: String,
    /// Ambient degree bound for polynomial rings.
    #[arg(long)]
    pub bound: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The smallest factroid containing the generators.
    Closure {
        #[command(flatten)]
        args: SubgroupArgs,
        #[arg(long)]
        trace: bool,
    },
    /// The saturation of the generator list.
    Saturate {
        #[command(flatten)]
        args: SubgroupArgs,
    },
    /// The largest monoid for which the span (or closure) is a factroid.
    Wof {
        #[command(flatten)]
        args: SubgroupArgs,
        /// Replace the span by its closure under `--mulset` first.
        #[arg(long)]
        close: bool,
    },
    /// The largest subring over which the span (or closure) is a module.
    Aof {
        #[command(flatten)]
        args: SubgroupArgs,
        #[arg(long)]
        close: bool,
    },
    /// `(F : T)` for the span `F` of `--gens`.
    Colon {
        #[command(flatten)]
        args: SubgroupArgs,
        #[arg(long)]
        by: String,
        #[arg(long)]
        close: bool,
    },
    /// Whether the span of the generators is a factroid.
    Check {
        #[command(flatten)]
        args: SubgroupArgs,
    },
    /// Whether `num/den` is a finite sum of reciprocals of elements of `W`.
    Egyptian {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        num: String,
        #[arg(long)]
        den: String,
        #[arg(long, default_value_t = 2)]
        max_witness_degree: u32,
    },
    /// Greedy unit-fraction expansion of a positive rational.
    Greedy {
        #[arg(long)]
        rational: String,
        /// Use distinct denominators.
        #[arg(long)]
        distinct: bool,
    },
    /// Searches for `h ∈ W` with `h·x` in the closure of `h·S`.
    Gmember {
        #[command(flatten)]
        args: SubgroupArgs,
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 2)]
        max_witness_degree: u32,
    },
    /// Whether `([hF]^W : h) = F` for every `h` in `--by`.
    Tregular {
        #[command(flatten)]
        args: SubgroupArgs,
        #[arg(long)]
        by: String,
        #[arg(long)]
        close: bool,
    },
    /// Unit-additive and sublocalizable predicates, and the unit-additive chain.
    Classify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// The factroids of `Z` or `GF(p)[x]`.
    Euclid {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// All factroids (or all subgroups) of a small ambient space.
    Enumerate {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(long)]
        subgroups: bool,
    },
    /// Closure by literal iteration over enumerated elements.
    Closure {
        #[command(flatten)]
        args: SubgroupArgs,
        /// Also run the engine and report whether the two agree.
        #[arg(long)]
        compare: bool,
    },
    /// Random singleton closures compared against the engine.
    Fuzz {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A successful result plus an exit code (2 for an exhausted search).
struct Report {
    value: Value,
    code: i32,
}

impl From<Value> for Report {
    fn from(value: Value) -> Self {
        Report { value, code: 0 }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: 1, stdout: String::new(), stderr: rendered },
            };
        }
    };
    let invocation = json!(argv.iter().skip(1).collect::<Vec<_>>());
    match execute(&cli.command) {
        Ok(report) => {
            let stdout = match cli.output {
                OutputMode::Json => render_json(json!({
                    "schema": SCHEMA,
                    "invocation": invocation,
                    "result": report.value,
                })),
                OutputMode::Text => render_text(&report.value),
            };
            Outcome { code: report.code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let stderr = format!("error[{}]: {e}\n", e.category());
            let stdout = match cli.output {
                OutputMode::Json => render_json(json!({
                    "schema": SCHEMA,
                    "invocation": invocation,
                    "error": {"category": e.category(), "message": e.to_string()},
                })),
                OutputMode::Text => String::new(),
            };
            Outcome { code: e.exit_code(), stdout, stderr }
        }
    }
}

fn render_json(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// `key: value` lines; nested objects are indented, scalar arrays joined.
pub fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(map) => {
                for (k, val) in map {
                    match val {
                        Value::Object(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(val, indent + 1, out);
                        }
                        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
                            let joined: Vec<String> = items.iter().map(scalar).collect();
                            out.push_str(&format!("{pad}{k}: [{}]\n", joined.join(", ")));
                        }
                        Value::Array(items) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            for item in items {
                                match item {
                                    Value::Array(row) if row.iter().all(|i| !i.is_object() && !i.is_array()) => {
                                        let joined: Vec<String> = row.iter().map(scalar).collect();
                                        out.push_str(&format!("{pad}  - [{}]\n", joined.join(", ")));
                                    }
                                    _ => {
                                        out.push_str(&format!("{pad}  -\n"));
                                        walk(item, indent + 2, out);
                                    }
                                }
                            }
                        }
                        _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                    }
                }
            }
            Value::Array(items) => {
                for item in items {
                    walk(item, indent, out);
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other))),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

fn read_list(ring: &RingSpec, text: &str) -> Result<Vec<RingElement>> {
    if text.trim() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidArgument(format!("cannot read standard input: {e}")))?;
        return parse_element_list(ring, &buf.replace('\n', ";"));
    }
    parse_element_list(ring, text)
}

struct Context {
    ring: RingSpec,
    w: MultSet,
}

fn context(args: &RingArgs) -> Result<Context> {
    let ring = parse_ring(&args.ring)?;
    let w = MultSet::parse(&ring, &args.mulset)?;
    Ok(Context { ring, w })
}

fn formatted(ring: &RingSpec, xs: &[RingElement]) -> Vec<String> {
    xs.iter().map(|x| ring.format(x)).collect()
}

/// The span of `--gens`, or its closure under `--mulset` when `close` is set.
fn subgroup(args: &SubgroupArgs, close: bool) -> Result<(Context, Vec<RingElement>, SubgroupRep)> {
    let cx = context(&args.ring)?;
    let gens = read_list(&cx.ring, &args.gens)?;
    let f = if close {
        closure(&cx.ring, &gens, &cx.w, args.bound, false)?.result
    } else {
        SubgroupRep::generated(&cx.ring, &gens, args.bound)?
    };
    Ok((cx, gens, f))
}

fn subgroup_json(f: &SubgroupRep) -> Value {
    let mut v = f.to_json();
    v["basis"] = json!(f.format_basis());
    v
}

fn search_code(found: bool) -> i32 {
    if found {
        0
    } else {
        2
    }
}

fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Closure { args, trace } => {
            let cx = context(&args.ring)?;
            let gens = read_list(&cx.ring, &args.gens)?;
            let c = closure(&cx.ring, &gens, &cx.w, args.bound, *trace)?;
            let mut v = c.to_json();
            v["ring"] = json!(cx.ring.to_string());
            v["mulset"] = json!(cx.w.describe());
            v["generators"] = json!(formatted(&cx.ring, &gens));
            Ok(v.into())
        }
        Command::Saturate { args } => {
            let cx = context(&args.ring)?;
            let gens = read_list(&cx.ring, &args.gens)?;
            let sat = saturate(&cx.ring, &gens, &cx.w, args.bound)?;
            let elements: Vec<RingElement> = sat.into_iter().collect();
            Ok(json!({
                "count": elements.len(),
                "elements": formatted(&cx.ring, &elements),
            })
            .into())
        }
        Command::Wof { args, close } => {
            let (_, _, f) = subgroup(args, *close)?;
            Ok(json!({"subgroup": subgroup_json(&f), "w_of": w_of(&f)?.to_json()}).into())
        }
        Command::Aof { args, close } => {
            let (_, _, f) = subgroup(args, *close)?;
            Ok(json!({"subgroup": subgroup_json(&f), "a_of": a_of(&f)?.to_json()}).into())
        }
        Command::Colon { args, by, close } => {
            let (cx, _, f) = subgroup(args, *close)?;
            let t = read_list(&cx.ring, by)?;
            let c = colon_by_set(&f, &t)?;
            Ok(json!({"subgroup": subgroup_json(&f), "by": formatted(&cx.ring, &t), "colon": subgroup_json(&c)}).into())
        }
        Command::Check { args } => {
            let (cx, _, f) = subgroup(args, false)?;
            Ok(json!({
                "subgroup": subgroup_json(&f),
                "mulset": cx.w.describe(),
                "is_factroid": is_factroid(&f, &cx.w)?,
            })
            .into())
        }
        Command::Egyptian { ring, num, den, max_witness_degree } => {
            let cx = context(ring)?;
            let a = parse_element(&cx.ring, num)?;
            let b = parse_element(&cx.ring, den)?;
            let m = egyptian_decide(&cx.ring, &a, &b, &cx.w, *max_witness_degree)?;
            let mut v = m.to_json(&cx.ring);
            v["denominator"] = json!(cx.ring.format(&b));
            Ok(Report { code: search_code(m.is_member()), value: v })
        }
        Command::Greedy { rational, distinct } => {
            let (a, b) = parse_rational(rational)?;
            let wit = greedy_unit_fractions(&a, &b, *distinct)?;
            let mut v = wit.to_json(&RingSpec::Integers);
            v["verified"] = json!(witness_verify(&RingSpec::Integers, &wit)?);
            Ok(v.into())
        }
        Command::Gmember { args, element, max_witness_degree } => {
            let cx = context(&args.ring)?;
            let s = read_list(&cx.ring, &args.gens)?;
            let x = parse_element(&cx.ring, element)?;
            let m = g_membership(&cx.ring, &x, &s, &cx.w, *max_witness_degree)?;
            Ok(Report { code: search_code(m.is_member()), value: m.to_json(&cx.ring) })
        }
        Command::Tregular { args, by, close } => {
            let (cx, _, f) = subgroup(args, *close)?;
            let t = read_list(&cx.ring, by)?;
            let rep = t_regular_check(&f, &t, &cx.w)?;
            Ok(json!({
                "subgroup": subgroup_json(&f),
                "by": formatted(&cx.ring, &t),
                "holds": rep.holds,
                "counterexample": rep.counterexample.map(|(h, x)| json!({
                    "h": cx.ring.format(&h),
                    "x": cx.ring.format(&x),
                })),
            })
            .into())
        }
        Command::Classify { ring, depth, bound } => {
            let ring = parse_ring(ring)?;
            let mut v = classify(&ring)?.to_json();
            if let Some(depth) = depth {
                v["ua_chain"] = ua_chain(&ring, *depth, *bound)?.to_json();
            }
            Ok(v.into())
        }
        Command::Euclid { ring, bound } => {
            let ring = parse_ring(ring)?;
            let fs = euclidean_factroids(&ring, *bound)?;
            Ok(json!({
                "ring": ring.to_string(),
                "count": fs.len(),
                "factroids": fs.iter().map(subgroup_json).collect::<Vec<_>>(),
            })
            .into())
        }
        Command::Oracle { command } => execute_oracle(command),
    }
}

fn oracle_sets(u: &Universe, sets: &[Vec<usize>]) -> Vec<Value> {
    let ring = u.ring();
    sets.iter()
        .map(|s| json!({"size": s.len(), "elements": formatted(&ring, &u.elements_of(s))}))
        .collect()
}

fn execute_oracle(cmd: &OracleCommand) -> Result<Report> {
    let budget = EnumerationBudget::default();
    match cmd {
        OracleCommand::Enumerate { ring, bound, subgroups } => {
            let cx = context(ring)?;
            let u = Universe::new(&cx.ring, *bound)?;
            let sets = if *subgroups {
                enumerate_subgroups(&u, &budget)?
            } else {
                enumerate_factroids(&u, &cx.w, &budget)?
            };
            Ok(json!({
                "kind": if *subgroups { "subgroups" } else { "factroids" },
                "count": sets.len(),
                "sets": oracle_sets(&u, &sets),
            })
            .into())
        }
        OracleCommand::Closure { args, compare } => {
            let cx = context(&args.ring)?;
            let gens = read_list(&cx.ring, &args.gens)?;
            if cx.ring == RingSpec::Integers {
                let g = gens
                    .iter()
                    .filter_map(RingElement::as_int)
                    .fold(BigInt::from(0), |acc, x| num_integer::Integer::gcd(&acc, x));
                let naive = naive_closure_int(&g, &cx.w)?;
                let mut v = json!({"generator": naive.to_string()});
                if *compare {
                    let engine = closure(&cx.ring, &gens, &cx.w, None, false)?.result;
                    v["engine_generator"] = json!(engine.format_basis());
                    v["agree"] = json!(engine == SubgroupRep::CyclicInt(naive));
                }
                return Ok(v.into());
            }
            let d = args.bound.unwrap_or_else(|| max_degree(&gens));
            let u = Universe::new(&cx.ring, d)?;
            let naive = naive_closure(&u, &gens, &cx.w)?;
            let mut v = json!({"size": naive.len(), "elements": formatted(&cx.ring, &u.elements_of(&naive))});
            if *compare {
                let agree = engine_agrees(&cx, &u, &gens, d, &naive)?;
                v["agree"] = json!(agree);
            }
            Ok(Report { code: 0, value: v })
        }
        OracleCommand::Fuzz { ring, bound, cases, seed } => {
            let cx = context(ring)?;
            let u = Universe::new(&cx.ring, *bound)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut mismatches = Vec::new();
            for _ in 0..*cases {
                let g = u.element(rng.gen_range(0..u.size()));
                let naive = naive_closure(&u, std::slice::from_ref(&g), &cx.w)?;
                if !engine_agrees(&cx, &u, std::slice::from_ref(&g), *bound, &naive)? {
                    mismatches.push(cx.ring.format(&g));
                }
            }
            Ok(Report {
                code: i32::from(!mismatches.is_empty()),
                value: json!({"cases": cases, "seed": seed, "mismatches": mismatches}),
            })
        }
    }
}

fn max_degree(gens: &[RingElement]) -> u32 {
    gens.iter()
        .filter_map(|g| g.as_poly().and_then(|p| p.degree()))
        .max()
        .unwrap_or(0)
}

fn engine_agrees(cx: &Context, u: &Universe, gens: &[RingElement], d: u32, naive: &[usize]) -> Result<bool> {
    let engine = closure(&cx.ring, gens, &cx.w, Some(d), false)?.result;
    let mut idx: Vec<usize> = engine
        .elements()?
        .iter()
        .map(|e| u.index(e).expect("engine elements lie in the universe"))
        .collect();
    idx.sort_unstable();
    Ok(idx == naive)
}
