//! `trix`: build, inspect, search and verify labeled-tree indexes.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use trix_core::gen::FamilySpec;
use trix_core::oracle::{limit, measure_with_limit};
use trix_core::verify::{seeded_trie, shrink, verify_trie, Checker};
use trix_core::{parse_trie, parse_word_list, Error, ForwardTrie, Index, Step, Symbol};

#[derive(Parser)]
#[command(name = "trix", version, about = "Suffix tree, W-link and implicit DAWG index over labeled trees")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an index from a trie or word-list file.
    Build {
        #[command(flatten)]
        input: Input,
        /// Index file to write.
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Node, edge and storage counts.
    Stats {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Also measure the explicit (quadratic) structures with the oracle.
        #[arg(long)]
        full: bool,
        /// Ignore the node limit for --full.
        #[arg(long)]
        force: bool,
    },
    /// Report every occurrence of a pattern.
    Search {
        #[command(flatten)]
        input: Input,
        /// Bytes when the index has a charset, otherwise integer symbols
        /// separated by spaces or commas. Empty matches everywhere.
        pattern: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a script of `L <sym>` / `R <sym>` extensions, one per line.
    Bidi {
        #[command(flatten)]
        input: Input,
        /// Script file, `-` for stdin.
        #[arg(long, conflicts_with = "steps")]
        script: Option<PathBuf>,
        /// Inline script with steps separated by `;`.
        #[arg(long, short = 'e')]
        steps: Option<String>,
    },
    /// Write a generated trie in TRIE v1 format.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Check indexes against the brute-force oracle.
    Verify {
        /// Index, trie or word-list files.
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum)]
        charset: Option<CharsetKind>,
        /// Number of seeded random tries to check; 100 when no inputs are given.
        #[arg(long)]
        seeds: Option<u64>,
        /// Redirect the k-th soft macro link of every input before checking.
        #[arg(long, hide = true)]
        corrupt_macro_link: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Path of a's ending in SIGMA distinct leaves.
    Broom { n: usize, sigma: usize },
    /// Path of k a's over a complete binary tree with k leaves.
    Comb { k: usize },
    /// The string a^(m-1) b as a path.
    PathAb { m: usize },
    SubalphaComb { depth: usize },
    Random {
        n: usize,
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CharsetKind {
    Ascii,
}

#[derive(Args)]
struct Input {
    /// Index file, TRIE v1 file or word list; `-` for stdin.
    input: PathBuf,
    /// Read word lists as text, one symbol per byte.
    #[arg(long, value_enum)]
    charset: Option<CharsetKind>,
}

fn read_input(path: &Path) -> anyhow::Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        return Ok(buf);
    }
    std::fs::read(path).with_context(|| format!("reading {}", path.display()))
}

/// Index files are recognized by their magic, TRIE v1 by its header; anything
/// else is a word list.
fn load(path: &Path, charset: Option<CharsetKind>) -> anyhow::Result<Index> {
    let bytes = read_input(path)?;
    if Index::sniff(&bytes) {
        return Index::from_bytes(&bytes).with_context(|| format!("loading {}", path.display()));
    }
    let text = std::str::from_utf8(&bytes).with_context(|| format!("{} is not text", path.display()))?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let parsed = if first.trim_start().starts_with("TRIE") {
        parse_trie(text).map(|t| (t, None))
    } else {
        parse_word_list(text, charset.is_some())
    };
    let (t, cs) = parsed.with_context(|| format!("parsing {}", path.display()))?;
    Ok(Index::build(&t).with_charset(cs))
}

/// Symbols of one token or pattern; `None` when it names something outside
/// the index alphabet.
fn symbols(idx: &Index, text: &str) -> anyhow::Result<Option<Vec<Symbol>>> {
    if idx.charset().is_some() {
        return Ok(idx.encode(text.as_bytes()));
    }
    let mut out = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let s: u64 = tok.parse().map_err(|_| anyhow!("not an integer symbol: {tok:?}"))?;
        if s == 0 || s > idx.trie().sigma() as u64 {
            return Ok(None);
        }
        out.push(s as Symbol);
    }
    Ok(Some(out))
}

fn print_occurrences(out: &mut impl Write, occ: &[(usize, usize)]) -> std::io::Result<()> {
    writeln!(out, "count {}", occ.len())?;
    for (u, v) in occ {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

fn cmd_stats(idx: &Index, json: bool, full: bool, force: bool) -> anyhow::Result<()> {
    let st = idx.suffix_tree();
    let storage = idx.wlinks().storage(st);
    let mut report = json!({
        "n": idx.trie().input_nodes(),
        "n_aug": idx.trie().node_count(),
        "sigma": idx.trie().sigma(),
        "stree_b_nodes": st.node_count(),
        "stree_b_edges": st.edge_count(),
        "stree_b_leaves": st.leaf_count(),
        "sa_b_len": st.suffix_array().0.len(),
        "micro_sigma": idx.wlinks().sigma(),
        "storage": {
            "hard_links": storage.hard_links,
            "macro_entries": storage.macro_entries,
            "pa_entries": storage.pa_entries,
            "successors": storage.successors,
            "micro_trees": storage.micro_trees,
            "total": storage.total(),
        },
    });
    if full {
        let cap = if force { usize::MAX } else { limit() };
        let size = measure_with_limit(idx.trie(), cap).map_err(|e| match e {
            Error::SizeLimit { .. } => anyhow!("{e}; rerun with --force or raise TRIX_LIMIT"),
            e => e.into(),
        })?;
        report["oracle"] = serde_json::to_value(size)?;
    }
    let mut out = std::io::stdout().lock();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        print_flat(&mut out, "", &report)?;
    }
    Ok(())
}

fn print_flat(out: &mut impl Write, prefix: &str, v: &serde_json::Value) -> std::io::Result<()> {
    match v {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                print_flat(out, &key, v)?;
            }
            Ok(())
        }
        v => writeln!(out, "{prefix} {v}"),
    }
}

fn parse_script(idx: &Index, text: &str) -> anyhow::Result<Vec<(String, Option<Step>)>> {
    let mut steps = Vec::new();
    for (i, raw) in text.split(['\n', ';']).enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (dir, sym) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let sym = sym.trim();
        let left = match dir {
            "L" | "l" => true,
            "R" | "r" => false,
            _ => bail!("script entry {}: expected `L <sym>` or `R <sym>`, got {line:?}", i + 1),
        };
        let step = match symbols(idx, sym)? {
            Some(s) if s.len() == 1 => Some(if left { Step::Left(s[0]) } else { Step::Right(s[0]) }),
            Some(s) if s.len() > 1 || idx.charset().is_none() => {
                bail!("script entry {}: expected one symbol, got {sym:?}", i + 1)
            }
            _ if sym.is_empty() => bail!("script entry {}: missing symbol", i + 1),
            _ => None,
        };
        steps.push((line.to_string(), step));
    }
    Ok(steps)
}

fn cmd_bidi(idx: &Index, steps: &[(String, Option<Step>)]) -> anyhow::Result<u8> {
    let mut out = std::io::stdout().lock();
    let mut cursor = idx.cursor();
    let mut probes = Default::default();
    for (k, (text, step)) in steps.iter().enumerate() {
        let next = match *step {
            Some(Step::Left(b)) => cursor.extend_left(idx, b, &mut probes)?,
            Some(Step::Right(a)) => cursor.extend_right(idx, a, &mut probes)?,
            None => None,
        };
        match next {
            Some(c) => {
                cursor = c;
                writeln!(out, "step {} {text}: {} occurrences", k + 1, c.count(idx))?;
            }
            None => {
                writeln!(out, "step {} {text}: no match", k + 1)?;
                writeln!(out, "count 0")?;
                return Ok(1);
            }
        }
    }
    print_occurrences(&mut out, &cursor.occurrences(idx))?;
    Ok(0)
}

/// Shrink a trie whose fresh index fails verification and print it.
fn report_counterexample(t: &ForwardTrie) {
    let fails = |t: &ForwardTrie| matches!(verify_trie(t), Ok(Err(_)));
    let small = shrink(t, fails);
    if let Ok(Err(f)) = verify_trie(&small) {
        println!("  minimized ({} nodes): {f}", small.node_count());
    }
    print!("{}", small.to_trie_v1());
}

fn cmd_verify(
    inputs: &[PathBuf],
    charset: Option<CharsetKind>,
    seeds: Option<u64>,
    corrupt: Option<usize>,
) -> anyhow::Result<u8> {
    let mut failed = 0;
    for path in inputs {
        let mut idx = load(path, charset)?;
        if let Some(k) = corrupt {
            let nodes = idx.suffix_tree().node_count();
            match idx.wlinks_mut().corrupt_macro_link(k, nodes) {
                Some((root, a)) => println!("injected fault: macro link of node {root} symbol {a}"),
                None => println!("injected fault: none, {} has no soft macro links", path.display()),
            }
        }
        let result = Checker::new(&idx).map_err(|e| anyhow!("{}: {e}", path.display()))?.all();
        match result {
            Ok(()) => println!("PASS {} ({} suffix-tree nodes)", path.display(), idx.suffix_tree().node_count()),
            Err(f) => {
                failed += 1;
                println!("FAIL {}: {f}", path.display());
                let base = idx.trie().base();
                if matches!(verify_trie(&base), Ok(Err(_))) {
                    report_counterexample(&base);
                } else {
                    println!("  a fresh build of the same trie passes; the stored index is damaged");
                }
            }
        }
    }

    let seeds = seeds.unwrap_or(if inputs.is_empty() { 100 } else { 0 });
    if seeds > 0 {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(seeds as usize) as u64;
        let mut outcomes: Vec<(u64, trix_core::Result<Result<(), trix_core::verify::Failure>>)> =
            std::thread::scope(|s| {
                let handles: Vec<_> = (0..workers)
                    .map(|w| {
                        s.spawn(move || {
                            (w..seeds).step_by(workers as usize).map(|seed| (seed, verify_trie(&seeded_trie(seed)))).collect::<Vec<_>>()
                        })
                    })
                    .collect();
                handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
            });
        outcomes.sort_by_key(|o| o.0);
        let mut bad = 0;
        for (seed, outcome) in outcomes {
            match outcome.map_err(|e| anyhow!("seed {seed}: {e}"))? {
                Ok(()) => {}
                Err(f) => {
                    bad += 1;
                    println!("FAIL seed {seed}: {f}");
                    if bad == 1 {
                        report_counterexample(&seeded_trie(seed));
                    }
                }
            }
        }
        if bad == 0 {
            println!("PASS {seeds} seeded random tries");
        }
        failed += bad;
    }
    Ok(u8::from(failed > 0))
}

fn write_out(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(std::io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.cmd {
        Cmd::Build { input, out } => {
            let idx = load(&input.input, input.charset)?;
            idx.save(&out).with_context(|| format!("writing {}", out.display()))?;
            eprintln!("{}: {} suffix-tree nodes", out.display(), idx.suffix_tree().node_count());
            Ok(0)
        }
        Cmd::Stats { input, json, full, force } => {
            cmd_stats(&load(&input.input, input.charset)?, json, full, force)?;
            Ok(0)
        }
        Cmd::Search { input, pattern, json } => {
            let idx = load(&input.input, input.charset)?;
            let occ = match symbols(&idx, &pattern)? {
                Some(p) => idx.find(&p)?,
                None => Vec::new(),
            };
            let mut out = std::io::stdout().lock();
            if json {
                writeln!(out, "{}", json!({ "count": occ.len(), "occurrences": occ }))?;
            } else {
                print_occurrences(&mut out, &occ)?;
            }
            Ok(u8::from(occ.is_empty()))
        }
        Cmd::Bidi { input, script, steps } => {
            let idx = load(&input.input, input.charset)?;
            let text = match (script, steps) {
                (Some(p), _) => String::from_utf8(read_input(&p)?).context("script is not text")?,
                (None, Some(s)) => s,
                (None, None) => bail!("give a script with --script or --steps"),
            };
            let steps = parse_script(&idx, &text)?;
            cmd_bidi(&idx, &steps)
        }
        Cmd::Gen { family, out } => {
            let spec = match family {
                Family::Broom { n, sigma } => FamilySpec::Broom { n, sigma },
                Family::Comb { k } => FamilySpec::Comb { k },
                Family::PathAb { m } => FamilySpec::PathAb { m },
                Family::SubalphaComb { depth } => FamilySpec::SubalphaComb { depth },
                Family::Random { n, sigma, seed } => FamilySpec::Random { n, sigma, seed },
            };
            write_out(out.as_deref(), &spec.generate()?.to_trie_v1())?;
            Ok(0)
        }
        Cmd::Verify { inputs, charset, seeds, corrupt_macro_link } => {
            cmd_verify(&inputs, charset, seeds, corrupt_macro_link)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
