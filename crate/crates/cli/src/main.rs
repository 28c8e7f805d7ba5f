//! `scrutineer`: command-line front end for the social choice engine.
//!
//! Every command prints deterministic, machine-readable output: JSON with
//! lexicographically sorted keys (rationals rendered `p/q` in lowest terms,
//! profiles in the canonical grouped file format) or CSV for tabular data.
//! Exit codes: 0 success, 1 domain/validation error, 2 budget exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scrutineer_core::alts::{Alt, AltSet, TieBreak};
use scrutineer_core::axioms::search::{
    impossibility_search, SearchConfig, SearchKind, SearchOutcome, TableValues,
};
use scrutineer_core::axioms::{check_axiom, AxiomId, CheckReport, Witness};
use scrutineer_core::ballot::Ballot;
use scrutineer_core::consensus::{closest_consensus, ConsensusClass, DistanceId};
use scrutineer_core::epistemic::{jury_accuracy, jury_simulate, rational_to_f64, Accuracy};
use scrutineer_core::error::Error;
use scrutineer_core::fixtures::{fixture, FIXTURE_NAMES};
use scrutineer_core::format::{parse_profile, render_profile};
use scrutineer_core::games::{
    best_response_graph, dynamic_poa_with, DeviationKind, StrategySpace, VotingGame,
};
use scrutineer_core::multiwinner::{
    best_k, chamberlin_courant, condorcet_committees, cstv, pav_k, sequential_plurality,
    CommitteeResult, CstvMode, StageEvent, DEFAULT_BRANCH_BUDGET,
};
use scrutineer_core::profile::Profile;
use scrutineer_core::rules::{parse_rational, RuleHandle, ScoreVector, TraceEvent};
use scrutineer_core::strategy::{
    dominating_manipulation, find_manipulation, greedy_manipulation, InformationSet,
};
use scrutineer_core::tournaments::{
    majority_graph, mcgarvey_realize, parse_tournament, render_tournament,
};

#[derive(Parser)]
#[command(
    name = "scrutineer",
    version,
    about = "social choice engine",
    disable_help_subcommand = true
)]
struct Cli {
    /// Worker threads for search and simulation commands; never affects output.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single-winner rule on a profile.
    Elect(ElectArgs),
    /// Evaluate a committee rule on a profile.
    Committee(CommitteeArgs),
    /// Check an axiom of a rule over the full (n, m) domain.
    Axiom(AxiomArgs),
    /// Search for all function tables satisfying a set of axioms.
    Impossibility(ImpossibilityArgs),
    /// Search for manipulations of a rule by one voter.
    Manipulate(ManipulateArgs),
    /// Analyze the voting game induced by a rule.
    Game(GameArgs),
    /// Exact and simulated jury accuracies.
    Jury(JuryArgs),
    /// Closest-consensus view of a profile.
    Consensus(ConsensusArgs),
    /// Majority tournament of a profile, in the tournament text format.
    Tournament(TournamentArgs),
    /// Realize a tournament as the majority graph of a profile.
    Mcgarvey(McgarveyArgs),
    /// Print a named example profile.
    Fixtures(FixturesArgs),
}

#[derive(Args)]
struct ElectArgs {
    /// Rule spec, e.g. plurality, borda, quota:2, dictator:0, median:l>m>s.
    #[arg(long)]
    rule: String,
    #[arg(long)]
    profile: std::path::PathBuf,
    #[arg(long, value_enum)]
    tiebreak: Option<TieBreakArg>,
    /// Include the round-by-round trace.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct CommitteeArgs {
    #[arg(long, value_enum)]
    rule: CommitteeRuleArg,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    profile: std::path::PathBuf,
    #[arg(long, value_enum, default_value_t = CstvModeArg::Canonical)]
    mode: CstvModeArg,
    #[arg(long, default_value_t = DEFAULT_BRANCH_BUDGET)]
    branch_budget: usize,
    #[arg(long, value_enum)]
    tiebreak: Option<TieBreakArg>,
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct AxiomArgs {
    #[arg(long)]
    rule: String,
    #[arg(long)]
    axiom: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum)]
    tiebreak: Option<TieBreakArg>,
}

#[derive(Args)]
struct ImpossibilityArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Comma-separated axiom ids, e.g. resolute,non-imposed,strategy-proof.
    #[arg(long)]
    axioms: String,
    #[arg(long, default_value_t = SearchConfig::default().node_budget)]
    node_budget: u64,
}

#[derive(Args)]
struct ManipulateArgs {
    #[arg(long)]
    rule: String,
    #[arg(long)]
    profile: std::path::PathBuf,
    #[arg(long)]
    voter: usize,
    /// Run the greedy constructive algorithm for scoring rules.
    #[arg(long)]
    greedy: bool,
    /// Target alternative for --greedy.
    #[arg(long)]
    target: Option<String>,
    /// Profile files forming an information set (dominating manipulations).
    #[arg(long = "info-set", num_args = 1..)]
    info_set: Vec<std::path::PathBuf>,
    #[arg(long, value_enum)]
    tiebreak: Option<TieBreakArg>,
}

#[derive(Args)]
struct GameArgs {
    #[arg(long)]
    rule: String,
    #[arg(long)]
    profile: std::path::PathBuf,
    #[arg(long, value_enum)]
    space: SpaceArg,
    #[arg(long, value_enum)]
    report: ReportArg,
    /// Use best-response deviations only (default: any profitable deviation).
    #[arg(long)]
    best_response_only: bool,
}

#[derive(Args)]
struct JuryArgs {
    /// Competence as a rational, e.g. 2/3.
    #[arg(long)]
    p: String,
    #[arg(long)]
    n_max: u64,
    /// Add Monte-Carlo estimate columns with this many trials.
    #[arg(long)]
    simulate: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct ConsensusArgs {
    #[arg(long)]
    class: ClassArg,
    #[arg(long)]
    distance: DistanceArg,
    #[arg(long)]
    profile: std::path::PathBuf,
}

#[derive(Args)]
struct TournamentArgs {
    #[arg(long)]
    profile: std::path::PathBuf,
    /// Emit the weak tournament (ties kept in both directions).
    #[arg(long)]
    weak: bool,
}

#[derive(Args)]
struct McgarveyArgs {
    #[arg(long)]
    tournament: std::path::PathBuf,
}

#[derive(Args)]
struct FixturesArgs {
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    list: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum TieBreakArg {
    Lex,
}

#[derive(Copy, Clone, ValueEnum)]
enum CommitteeRuleArg {
    BestPlurality,
    BestApproval,
    BestBorda,
    Chco,
    Pav,
    SeqPlurality,
    Cstv,
    CondorcetCommittees,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum CstvModeArg {
    Canonical,
    Parallel,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Scf,
    Spf,
}

#[derive(Copy, Clone, ValueEnum)]
enum SpaceArg {
    Top,
    Full,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportArg {
    Poa,
    Nash,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum ClassArg {
    U,
    S,
    C,
}

#[derive(Copy, Clone, ValueEnum)]
enum DistanceArg {
    Swap,
    Discrete,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // usage and flag errors are validation errors (exit 1); pure
            // help/version requests stay successful
            let _ = err.print();
            return match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_budget() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let jobs = cli.jobs.max(1);
    match cli.command {
        Command::Elect(args) => elect(args),
        Command::Committee(args) => committee(args),
        Command::Axiom(args) => axiom(args),
        Command::Impossibility(args) => impossibility(args),
        Command::Manipulate(args) => manipulate(args),
        Command::Game(args) => game(args),
        Command::Jury(args) => jury(args, jobs),
        Command::Consensus(args) => consensus(args),
        Command::Tournament(args) => tournament(args),
        Command::Mcgarvey(args) => mcgarvey(args),
        Command::Fixtures(args) => fixtures_cmd(args),
    }
}

fn read_profile(path: &std::path::Path) -> Result<Profile, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_profile(&text)
}

fn tiebreak_of(arg: Option<TieBreakArg>) -> TieBreak {
    match arg {
        Some(TieBreakArg::Lex) => TieBreak::Lexicographic,
        None => TieBreak::None,
    }
}

fn labels_of(set: AltSet, p: &Profile) -> Vec<Value> {
    set.iter()
        .map(|a| Value::String(p.alternatives().label(a).to_string()))
        .collect()
}

fn label_of(a: Alt, p: &Profile) -> String {
    p.alternatives().label(a).to_string()
}

fn scores_json(scores: &[(Alt, scrutineer_core::Score)], p: &Profile) -> Value {
    let map: BTreeMap<String, Value> = scores
        .iter()
        .map(|(a, s)| (label_of(*a, p), Value::String(s.to_string())))
        .collect();
    Value::Object(map.into_iter().collect())
}

fn ballot_string(b: &Ballot, p: &Profile) -> String {
    b.as_slice()
        .iter()
        .map(|&a| p.alternatives().label(a))
        .collect::<Vec<_>>()
        .join(">")
}

fn trace_json(trace: &[TraceEvent], p: &Profile) -> Value {
    Value::Array(
        trace
            .iter()
            .map(|event| match event {
                TraceEvent::MajorityShortcut { winner } => {
                    json!({"majority_winner": label_of(*winner, p)})
                }
                TraceEvent::RunoffPair {
                    finalists,
                    eliminated,
                } => json!({
                    "eliminated": labels_of(*eliminated, p),
                    "finalists": labels_of(*finalists, p),
                }),
                TraceEvent::EliminationRound {
                    eliminated,
                    remaining,
                } => json!({
                    "eliminated": labels_of(*eliminated, p),
                    "remaining": labels_of(*remaining, p),
                }),
                TraceEvent::SwapBudget { budget } => json!({"swap_budget": budget}),
            })
            .collect(),
    )
}

fn elect(args: ElectArgs) -> Result<String, Error> {
    let profile = read_profile(&args.profile)?;
    let rule = RuleHandle::parse(&args.rule)?.with_tiebreak(tiebreak_of(args.tiebreak));
    let result = rule.evaluate(&profile)?;
    let winners = rule.tiebreak.resolve(result.winners);
    let mut obj = serde_json::Map::new();
    obj.insert("winners".into(), Value::Array(labels_of(winners, &profile)));
    if let Some(scores) = &result.scores {
        obj.insert("scores".into(), scores_json(scores, &profile));
    }
    if args.trace {
        if let Some(trace) = &result.trace {
            obj.insert("trace".into(), trace_json(trace, &profile));
        }
    }
    Ok(format!("{}\n", Value::Object(obj)))
}

fn committee_json(result: &CommitteeResult, p: &Profile, trace: bool) -> Value {
    let committees: Vec<Value> = result
        .committees
        .iter()
        .map(|c| Value::Array(labels_of(*c, p)))
        .collect();
    let mut obj = serde_json::Map::new();
    obj.insert("committees".into(), Value::Array(committees));
    obj.insert("truncated".into(), Value::Bool(result.truncated));
    if let Some(scores) = &result.scores {
        let map: BTreeMap<String, Value> = scores
            .iter()
            .map(|(c, s)| {
                let key = c
                    .iter()
                    .map(|a| p.alternatives().label(a))
                    .collect::<Vec<_>>()
                    .join(",");
                (key, Value::String(s.to_string()))
            })
            .collect();
        obj.insert("scores".into(), Value::Object(map.into_iter().collect()));
    }
    if trace {
        if let Some(events) = &result.trace {
            let array: Vec<Value> = events
                .iter()
                .map(|event| match event {
                    StageEvent::Elect { alt, voters } => json!({
                        "elect": label_of(*alt, p),
                        "voters": voters,
                    }),
                    StageEvent::Eliminate { alt } => json!({"eliminate": label_of(*alt, p)}),
                    StageEvent::CompleteElect { alts } => {
                        json!({"complete": labels_of(*alts, p)})
                    }
                    StageEvent::Pick { alt } => json!({"pick": label_of(*alt, p)}),
                })
                .collect();
            obj.insert("trace".into(), Value::Array(array));
        }
    }
    Value::Object(obj)
}

fn committee(args: CommitteeArgs) -> Result<String, Error> {
    let profile = read_profile(&args.profile)?;
    let k = args.k;
    let mode = match args.mode {
        CstvModeArg::Canonical => CstvMode::Canonical,
        CstvModeArg::Parallel => CstvMode::Parallel,
    };
    let result = match args.rule {
        CommitteeRuleArg::BestPlurality => best_k(&ScoreVector::Plurality, &profile, k)?,
        CommitteeRuleArg::BestApproval => best_k(&ScoreVector::KApproval(k), &profile, k)?,
        CommitteeRuleArg::BestBorda => best_k(&ScoreVector::Borda, &profile, k)?,
        CommitteeRuleArg::Chco => chamberlin_courant(&profile, k, &ScoreVector::Borda)?,
        CommitteeRuleArg::Pav => pav_k(&profile, k)?,
        CommitteeRuleArg::SeqPlurality => {
            sequential_plurality(&profile, k, tiebreak_of(args.tiebreak))?
        }
        CommitteeRuleArg::Cstv => cstv(&profile, k, mode, args.branch_budget)?,
        CommitteeRuleArg::CondorcetCommittees => {
            let committees = condorcet_committees(&profile, k)?;
            let mut obj = serde_json::Map::new();
            obj.insert(
                "committees".into(),
                Value::Array(
                    committees
                        .iter()
                        .map(|c| Value::Array(labels_of(*c, &profile)))
                        .collect(),
                ),
            );
            return Ok(format!("{}\n", Value::Object(obj)));
        }
    };
    Ok(format!(
        "{}\n",
        committee_json(&result, &profile, args.trace)
    ))
}

fn witness_json(w: &Witness) -> Value {
    let mut obj = serde_json::Map::new();
    if !w.profiles.is_empty() {
        obj.insert(
            "profiles".into(),
            Value::Array(
                w.profiles
                    .iter()
                    .map(|p| Value::String(render_profile(p)))
                    .collect(),
            ),
        );
    }
    if let Some(voter) = w.voter {
        obj.insert("voter".into(), json!(voter));
    }
    if !w.alternatives.is_empty() {
        let rendered: Vec<Value> = match w.profiles.first() {
            Some(p) => w
                .alternatives
                .iter()
                .map(|&a| Value::String(label_of(a, p)))
                .collect(),
            None => w.alternatives.iter().map(|a| json!(a.0)).collect(),
        };
        obj.insert("alternatives".into(), Value::Array(rendered));
    }
    if let Some(perm) = &w.voter_permutation {
        obj.insert("voter_permutation".into(), json!(perm));
    }
    if let Some(perm) = &w.alternative_permutation {
        obj.insert(
            "alternative_permutation".into(),
            json!(perm.iter().map(|a| a.0).collect::<Vec<_>>()),
        );
    }
    obj.insert("note".into(), Value::String(w.note.clone()));
    Value::Object(obj)
}

fn axiom(args: AxiomArgs) -> Result<String, Error> {
    let rule = RuleHandle::parse(&args.rule)?.with_tiebreak(tiebreak_of(args.tiebreak));
    let id = AxiomId::parse(&args.axiom)?;
    let report = check_axiom(&rule, id, args.n, args.m)?;
    let mut obj = serde_json::Map::new();
    obj.insert("axiom".into(), Value::String(id.to_string()));
    obj.insert("holds".into(), Value::Bool(report.holds()));
    obj.insert("m".into(), json!(args.m));
    obj.insert("n".into(), json!(args.n));
    obj.insert("rule".into(), Value::String(rule.to_string()));
    if let CheckReport::Fails(w) = &report {
        obj.insert("witness".into(), witness_json(w));
    }
    Ok(format!("{}\n", Value::Object(obj)))
}

fn impossibility(args: ImpossibilityArgs) -> Result<String, Error> {
    let kind = match args.kind {
        KindArg::Scf => SearchKind::Scf,
        KindArg::Spf => SearchKind::Spf,
    };
    let axioms: Vec<AxiomId> = args
        .axioms
        .split(',')
        .map(|s| AxiomId::parse(s.trim()))
        .collect::<Result<_, _>>()?;
    let cfg = SearchConfig {
        node_budget: args.node_budget,
        ..SearchConfig::default()
    };
    let outcome = impossibility_search(args.n, args.m, kind, &axioms, &cfg)?;
    let domain = scrutineer_core::axioms::Domain::new(args.n, args.m)?;
    let mut obj = serde_json::Map::new();
    obj.insert(
        "axioms".into(),
        Value::Array(
            axioms
                .iter()
                .map(|a| Value::String(a.to_string()))
                .collect(),
        ),
    );
    obj.insert("m".into(), json!(args.m));
    obj.insert("n".into(), json!(args.n));
    match outcome {
        SearchOutcome::Unsat => {
            obj.insert("census".into(), json!(0));
            obj.insert("result".into(), Value::String("unsat".into()));
        }
        SearchOutcome::Census { count, witnesses } => {
            obj.insert("census".into(), json!(count));
            obj.insert("result".into(), Value::String("census".into()));
            let tables: Vec<Value> = witnesses
                .iter()
                .map(|table| {
                    let rows: Vec<Value> = domain
                        .profiles
                        .iter()
                        .enumerate()
                        .map(|(i, p)| match &table.values {
                            TableValues::Scf(v) => json!({
                                "choice": labels_of(v[i], p),
                                "profile": render_profile(p),
                            }),
                            TableValues::Spf(v) => json!({
                                "order": v[i]
                                    .tiers()
                                    .iter()
                                    .map(|t| labels_of(*t, p))
                                    .collect::<Vec<_>>(),
                                "profile": render_profile(p),
                            }),
                        })
                        .collect();
                    Value::Array(rows)
                })
                .collect();
            obj.insert("witnesses".into(), Value::Array(tables));
        }
    }
    Ok(format!("{}\n", Value::Object(obj)))
}

fn manipulate(args: ManipulateArgs) -> Result<String, Error> {
    let profile = read_profile(&args.profile)?;
    let rule = RuleHandle::parse(&args.rule)?.with_tiebreak(tiebreak_of(args.tiebreak));
    let mut obj = serde_json::Map::new();
    obj.insert("voter".into(), json!(args.voter));

    if args.greedy {
        let target_label = args
            .target
            .as_deref()
            .ok_or_else(|| Error::invalid("--greedy needs --target"))?;
        let target = profile
            .alternatives()
            .by_label(target_label)
            .ok_or_else(|| Error::invalid(format!("unknown alternative `{target_label}`")))?;
        if args.voter >= profile.n() {
            return Err(Error::invalid(format!("no voter {}", args.voter)));
        }
        let remaining: Vec<Ballot> = profile
            .ballots()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != args.voter)
            .map(|(_, b)| b.clone())
            .collect();
        let minus =
            Profile::with_domain(profile.alternatives().clone(), profile.domain(), remaining)?;
        let ballot = greedy_manipulation(&rule, &minus, target)?;
        obj.insert("greedy_target".into(), Value::String(target_label.into()));
        obj.insert(
            "ballot".into(),
            match &ballot {
                Some(b) => Value::String(ballot_string(b, &profile)),
                None => Value::Null,
            },
        );
    } else if !args.info_set.is_empty() {
        let mut profiles = vec![profile.clone()];
        for path in &args.info_set {
            profiles.push(read_profile(path)?);
        }
        let is = InformationSet::new(args.voter, profiles)?;
        let ballot = dominating_manipulation(&rule, &is)?;
        obj.insert(
            "dominating".into(),
            match &ballot {
                Some(b) => Value::String(ballot_string(b, &profile)),
                None => Value::Null,
            },
        );
    } else {
        let witness = find_manipulation(&rule, &profile, args.voter)?;
        obj.insert(
            "manipulation".into(),
            match &witness {
                Some(w) => json!({
                    "outcome_strategic": label_of(w.outcome_strategic, &profile),
                    "outcome_truthful": label_of(w.outcome_truthful, &profile),
                    "strategic": ballot_string(&w.strategic, &profile),
                    "truthful": ballot_string(&w.truthful, &profile),
                }),
                None => Value::Null,
            },
        );
    }
    Ok(format!("{}\n", Value::Object(obj)))
}

fn game(args: GameArgs) -> Result<String, Error> {
    let profile = read_profile(&args.profile)?;
    let rule = RuleHandle::parse(&args.rule)?.with_tiebreak(TieBreak::Lexicographic);
    let space = match args.space {
        SpaceArg::Top => StrategySpace::TopOnly,
        SpaceArg::Full => StrategySpace::FullOrders,
    };
    let deviation = if args.best_response_only {
        DeviationKind::BestResponse
    } else {
        DeviationKind::Profitable
    };
    let mut obj = serde_json::Map::new();
    match args.report {
        ReportArg::Nash => {
            let graph = best_response_graph(&VotingGame {
                true_profile: profile.clone(),
                rule,
                space,
                deviation,
            })?;
            let reachable = graph.reachable_equilibria();
            let sinks: Vec<Value> = graph
                .sinks
                .iter()
                .map(|&s| {
                    json!({
                        "profile": render_profile(&graph.profiles[s]),
                        "reachable_from_truthful": reachable.contains(&s),
                        "winner": label_of(graph.outcomes[s], &profile),
                    })
                })
                .collect();
            obj.insert("equilibria".into(), Value::Array(sinks));
            obj.insert(
                "truthful_winner".into(),
                Value::String(label_of(graph.outcomes[graph.truthful_node], &profile)),
            );
        }
        ReportArg::Poa => {
            // the profile fixes (n, m, labels); the sweep ranges over all
            // true profiles of that shape
            let poa = dynamic_poa_with(&rule, profile.n(), profile.m(), space, deviation)?;
            obj.insert(
                "equilibrium_profile".into(),
                Value::String(render_profile(&poa.equilibrium_profile)),
            );
            obj.insert(
                "equilibrium_winner".into(),
                Value::String(label_of(poa.equilibrium_winner, &poa.equilibrium_profile)),
            );
            obj.insert("poa".into(), Value::String(poa.value.to_string()));
            obj.insert(
                "true_profile".into(),
                Value::String(render_profile(&poa.true_profile)),
            );
            obj.insert(
                "true_winner".into(),
                Value::String(label_of(poa.true_winner, &poa.true_profile)),
            );
        }
    }
    Ok(format!("{}\n", Value::Object(obj)))
}

fn jury(args: JuryArgs, jobs: usize) -> Result<String, Error> {
    if args.n_max.is_multiple_of(2) {
        return Err(Error::invalid("--n-max must be odd"));
    }
    let p_value = parse_rational(&args.p)
        .ok_or_else(|| Error::invalid(format!("bad rational `{}`", args.p)))?;
    let p = Accuracy::any(p_value)?;
    let mut rows = Vec::new();
    let mut n = 1;
    while n <= args.n_max {
        let exact = jury_accuracy(n, &p)?;
        let simulated = match args.simulate {
            Some(trials) => Some(jury_simulate(n, &p, trials, args.seed, jobs)?),
            None => None,
        };
        rows.push((n, exact, simulated));
        n += 2;
    }
    match args.format {
        FormatArg::Csv => {
            let mut out = String::new();
            if args.simulate.is_some() {
                out.push_str("n,exact,estimate,ci_low,ci_high\n");
            } else {
                out.push_str("n,exact\n");
            }
            for (n, exact, simulated) in rows {
                match simulated {
                    Some(sim) => {
                        let _ = writeln!(
                            out,
                            "{n},{exact},{:.6},{:.6},{:.6}",
                            sim.estimate, sim.ci_low, sim.ci_high
                        );
                    }
                    None => {
                        let _ = writeln!(out, "{n},{exact}");
                    }
                }
            }
            Ok(out)
        }
        FormatArg::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|(n, exact, simulated)| {
                    let mut row = serde_json::Map::new();
                    row.insert("exact".into(), Value::String(exact.to_string()));
                    row.insert("exact_f64".into(), json!(rational_to_f64(exact)));
                    row.insert("n".into(), json!(n));
                    if let Some(sim) = simulated {
                        row.insert("ci_high".into(), json!(sim.ci_high));
                        row.insert("ci_low".into(), json!(sim.ci_low));
                        row.insert("estimate".into(), json!(sim.estimate));
                    }
                    Value::Object(row)
                })
                .collect();
            let mut obj = serde_json::Map::new();
            obj.insert("p".into(), Value::String(p.value().to_string()));
            obj.insert("rows".into(), Value::Array(rows_json));
            if let Some(trials) = args.simulate {
                obj.insert("seed".into(), json!(args.seed));
                obj.insert("trials".into(), json!(trials));
            }
            Ok(format!("{}\n", Value::Object(obj)))
        }
    }
}

fn consensus(args: ConsensusArgs) -> Result<String, Error> {
    let profile = read_profile(&args.profile)?;
    let class = match args.class {
        ClassArg::U => ConsensusClass::Unanimous,
        ClassArg::S => ConsensusClass::StrongUnanimous,
        ClassArg::C => ConsensusClass::Condorcet,
    };
    let distance = match args.distance {
        DistanceArg::Swap => DistanceId::Swap,
        DistanceArg::Discrete => DistanceId::Discrete,
    };
    let outcome = closest_consensus(&profile, class, distance)?;
    let mut obj = serde_json::Map::new();
    obj.insert(
        "class".into(),
        Value::String(
            match class {
                ConsensusClass::Unanimous => "unanimous",
                ConsensusClass::StrongUnanimous => "strong-unanimous",
                ConsensusClass::Condorcet => "condorcet",
            }
            .into(),
        ),
    );
    obj.insert(
        "distance".into(),
        Value::String(
            match distance {
                DistanceId::Swap => "swap",
                DistanceId::Discrete => "discrete",
            }
            .into(),
        ),
    );
    obj.insert("min_distance".into(), json!(outcome.min_distance));
    obj.insert(
        "minimizers".into(),
        Value::Array(
            outcome
                .minimizers
                .iter()
                .map(|q| Value::String(render_profile(q)))
                .collect(),
        ),
    );
    obj.insert(
        "winners".into(),
        Value::Array(labels_of(outcome.winners, &profile)),
    );
    Ok(format!("{}\n", Value::Object(obj)))
}

fn tournament(args: TournamentArgs) -> Result<String, Error> {
    let profile = read_profile(&args.profile)?;
    let t = majority_graph(&profile, args.weak);
    Ok(render_tournament(&t, profile.alternatives()))
}

fn mcgarvey(args: McgarveyArgs) -> Result<String, Error> {
    let text = fs::read_to_string(&args.tournament)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", args.tournament.display())))?;
    let (t, alts) = parse_tournament(&text)?;
    let profile = mcgarvey_realize(&t, &alts)?;
    Ok(render_profile(&profile))
}

fn fixtures_cmd(args: FixturesArgs) -> Result<String, Error> {
    if args.list {
        let mut out = String::new();
        for name in FIXTURE_NAMES {
            out.push_str(name);
            out.push('\n');
        }
        return Ok(out);
    }
    let name = args
        .name
        .ok_or_else(|| Error::invalid("pass --name NAME or --list"))?;
    let profile = fixture(&name)?;
    Ok(render_profile(&profile))
}
