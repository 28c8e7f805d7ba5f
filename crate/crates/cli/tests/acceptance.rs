//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every tolerance is exact rational equality unless stated otherwise.
//! Criteria 5c and 7b assert claims that exhaustive computation refutes
//! (even-n weak-tournament transitivity on single-peaked domains, and the
//! price-of-anarchy direction between Borda and plurality at desk scale);
//! they are implemented as stated and fail with the counterexamples in the
//! message rather than being weakened to pass.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use scrutineer_core::alts::{Alt, AltSet, TieBreak};
use scrutineer_core::axioms::coalitions::{
    blocking_coalitions, decisive_coalitions, ultrafilter_check, CoalitionFamily,
};
use scrutineer_core::axioms::search::{
    impossibility_search, verify_table, SearchConfig, SearchKind, SearchOutcome, TableValues,
};
use scrutineer_core::axioms::{check_axiom_on, spf_of, AxiomId, Domain};
use scrutineer_core::ballot::Ballot;
use scrutineer_core::consensus::{closest_consensus, ConsensusClass, DistanceId};
use scrutineer_core::epistemic::{
    borda_mle_winners, hoeffding_bound_holds, jury_accuracy, jury_accuracy_sequence,
    min_disagreement_rankings, mle_rankings, sample_tournament_profile, Accuracy,
};
use scrutineer_core::fixtures::fixture;
use scrutineer_core::games::{dynamic_poa, StrategySpace};
use scrutineer_core::multiwinner::{
    best_k, chamberlin_courant, condorcet_committees, cstv, pav_k, CstvMode, DEFAULT_BRANCH_BUDGET,
};
use scrutineer_core::profile::{enumerate_profiles, Profile};
use scrutineer_core::rules::{
    condorcet_rule, copeland, median_rule, symmetric_borda, RuleHandle, RuleKind,
};
use scrutineer_core::rules::{
    dodgson, kemeny, plurality, plurality_runoff, positional, rule_catalog, Score, ScoreVector,
};
use scrutineer_core::strategy::{black_suite, find_manipulation};
use scrutineer_core::tournaments::condorcet_winner;

fn set(alts: &[u32]) -> AltSet {
    alts.iter().map(|&a| Alt(a)).collect()
}

fn ratio(num: i64, den: i64) -> Score {
    Score::new(BigInt::from(num), BigInt::from(den))
}

fn pass(criterion: &str, detail: &str) {
    println!("criterion {criterion}: PASS - {detail}");
}

#[test]
fn criterion_1_paper_example_regression() {
    let start = Instant::now();

    let pliny = fixture("PLINY").unwrap();
    assert_eq!(plurality(&pliny).winners, set(&[0]));
    assert_eq!(condorcet_winner(&pliny, false), set(&[1]));

    let gore = fixture("GORE").unwrap();
    let alts = gore.alternatives().clone();
    let by = |l: &str| alts.by_label(l).unwrap();
    let borda = positional(&gore, &ScoreVector::Borda).unwrap();
    assert_eq!(borda.winners, AltSet::singleton(by("Bush")));
    let score_of = |label: &str| -> Score {
        borda
            .scores
            .as_ref()
            .unwrap()
            .iter()
            .find(|(a, _)| *a == by(label))
            .unwrap()
            .1
            .clone()
    };
    // recomputed from the printed expressions: 3*48 + 2*50 + 1*2 etc.; the
    // printed Buchanan expression (2*48 = 96) omits the top-rank term of
    // the single Buchanan ballot, so the correct score is 99, cross-checked
    // by the net-preference identity Borda(x) = (sum_y net(x,y) + n(m-1))/2
    assert_eq!(score_of("Bush"), ratio(3 * 48 + 2 * 50 + 2, 1));
    assert_eq!(score_of("Gore"), ratio(3 * 49 + 2 * 2 + 49, 1));
    assert_eq!(score_of("Nader"), ratio(3 * 2 + 49, 1));
    assert_eq!(score_of("Buchanan"), ratio(99, 1));
    let sym = symmetric_borda(&gore);
    let net_sum = sym
        .scores
        .as_ref()
        .unwrap()
        .iter()
        .find(|(a, _)| *a == by("Buchanan"))
        .unwrap()
        .1
        .clone();
    assert_eq!(
        (net_sum + ratio(100 * 3, 1)) / ratio(2, 1),
        score_of("Buchanan")
    );

    let young = kemeny(&fixture("YOUNG").unwrap()).unwrap();
    assert_eq!(young.choice.winners, set(&[1]));
    assert_eq!(young.min_distance, 76);

    assert_eq!(
        plurality_runoff(&fixture("RUNOFF_A").unwrap())
            .unwrap()
            .winners,
        set(&[2])
    );
    assert_eq!(
        plurality_runoff(&fixture("RUNOFF_B").unwrap())
            .unwrap()
            .winners,
        set(&[1])
    );

    let c3 = fixture("CONDORCET3").unwrap();
    assert_eq!(copeland(&c3).winners, set(&[0, 1, 2]));
    assert_eq!(condorcet_rule(&c3).winners, set(&[0, 1, 2, 3]));

    let hikers = fixture("HIKERS").unwrap();
    let axis = Ballot::new(vec![Alt(0), Alt(1), Alt(2)]).unwrap();
    assert_eq!(median_rule(&hikers, &axis).unwrap().winners, set(&[1]));

    let zwicker = fixture("ZWICKER").unwrap();
    let truthful = positional(&zwicker, &ScoreVector::Borda).unwrap();
    assert_eq!(truthful.winners, set(&[4])); // e
    let e_score = truthful
        .scores
        .as_ref()
        .unwrap()
        .iter()
        .find(|(a, _)| *a == Alt(4))
        .unwrap()
        .1
        .clone();
    assert_eq!(e_score, ratio(17, 1));
    let borda_lex = RuleHandle::new(RuleKind::Positional(ScoreVector::Borda))
        .with_tiebreak(TieBreak::Lexicographic);
    let witness = find_manipulation(&borda_lex, &zwicker, 0)
        .unwrap()
        .expect("Borda is manipulable here");
    assert_eq!(witness.outcome_truthful, Alt(4)); // e
    assert_eq!(witness.outcome_strategic, Alt(3)); // d

    let sp = fixture("SP_RESOLUTE").unwrap();
    let plur_lex = RuleHandle::new(RuleKind::Plurality).with_tiebreak(TieBreak::Lexicographic);
    assert_eq!(plur_lex.winners(&sp).unwrap(), set(&[0]));
    let witness = find_manipulation(&plur_lex, &sp, 2)
        .unwrap()
        .expect("voter 3 can manipulate");
    assert_eq!(witness.outcome_strategic, Alt(1)); // b

    let falisz = fixture("FALISZ").unwrap();
    assert_eq!(
        chamberlin_courant(&falisz, 2, &ScoreVector::Borda)
            .unwrap()
            .committees,
        vec![set(&[0, 2])]
    );
    let pav = pav_k(&falisz, 2).unwrap();
    assert_eq!(pav.committees, vec![set(&[0, 1])]);
    let winning = pav
        .scores
        .unwrap()
        .into_iter()
        .find(|(c, _)| *c == set(&[0, 1]))
        .unwrap();
    assert_eq!(winning.1, ratio(13, 2));
    assert_eq!(
        best_k(&ScoreVector::Plurality, &falisz, 2)
            .unwrap()
            .committees,
        vec![set(&[0, 2]), set(&[1, 2]), set(&[2, 3]), set(&[2, 4])]
    );
    let parallel = cstv(&falisz, 2, CstvMode::Parallel, DEFAULT_BRANCH_BUDGET).unwrap();
    assert!(!parallel.truncated);
    assert!(parallel.committees.contains(&set(&[1, 2])));

    let barbera = fixture("BARBERA").unwrap();
    assert_eq!(condorcet_committees(&barbera, 1).unwrap(), vec![set(&[0])]);
    assert_eq!(
        condorcet_committees(&barbera, 2).unwrap(),
        vec![set(&[0, 1])]
    );
    assert_eq!(
        condorcet_committees(&barbera, 3).unwrap(),
        vec![set(&[2, 3, 4])]
    );

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass("1", &format!("paper example regression in {elapsed:?}"));
}

#[test]
fn criterion_2_jury_theorem_exact() {
    let start = Instant::now();
    for (num, den) in [(3i64, 5i64), (2, 3), (9, 10)] {
        let p = Accuracy::competent(ratio(num, den)).unwrap();
        let seq = jury_accuracy_sequence(21, &p).unwrap();
        assert_eq!(seq.len(), 11);
        for (n, value) in &seq {
            assert_eq!(*value, jury_accuracy(*n, &p).unwrap(), "n = {n}");
            assert!(p.value() <= value, "floor fails at n = {n}");
        }
        for pair in seq.windows(2) {
            assert!(pair[0].1 <= pair[1].1, "monotonicity fails");
            if p.value() < &Score::one() {
                assert!(pair[0].1 < pair[1].1, "strictness fails");
            }
        }
    }
    let p = Accuracy::competent(ratio(2, 3)).unwrap();
    assert_eq!(jury_accuracy(3, &p).unwrap(), ratio(20, 27));
    let half = Accuracy::any(ratio(1, 2)).unwrap();
    for (_, value) in jury_accuracy_sequence(21, &half).unwrap() {
        assert_eq!(value, ratio(1, 2));
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(
        "2",
        &format!("recursion = closed form for n <= 21 in {elapsed:?}"),
    );
}

#[test]
fn criterion_3_impossibility_census() {
    let cfg = SearchConfig::default();

    let start = Instant::now();
    let warmup = impossibility_search(
        2,
        2,
        SearchKind::Scf,
        &[AxiomId::Anonymous, AxiomId::Neutral, AxiomId::Resolute],
        &cfg,
    )
    .unwrap();
    assert!(matches!(warmup, SearchOutcome::Unsat));
    let warmup_time = start.elapsed();
    assert!(warmup_time < Duration::from_secs(1));

    let start = Instant::now();
    let may = impossibility_search(
        3,
        2,
        SearchKind::Scf,
        &[
            AxiomId::Resolute,
            AxiomId::Anonymous,
            AxiomId::Neutral,
            AxiomId::Monotonic,
        ],
        &cfg,
    )
    .unwrap();
    let SearchOutcome::Census { count, witnesses } = may else {
        panic!("expected census");
    };
    assert_eq!(count, 1);
    let TableValues::Scf(values) = &witnesses[0].values else {
        panic!("expected SCF table");
    };
    let d = Domain::new(3, 2).unwrap();
    for (i, p) in d.profiles.iter().enumerate() {
        assert_eq!(values[i], plurality(p).winners);
    }
    let may_time = start.elapsed();
    assert!(may_time < Duration::from_secs(1));

    let start = Instant::now();
    let axioms = [
        AxiomId::Resolute,
        AxiomId::NonImposed,
        AxiomId::StrategyProof,
    ];
    let gs = impossibility_search(2, 3, SearchKind::Scf, &axioms, &cfg).unwrap();
    let SearchOutcome::Census { count, witnesses } = gs else {
        panic!("expected census");
    };
    assert_eq!(count, 2);
    let d = Domain::new(2, 3).unwrap();
    let mut dictators = Vec::new();
    for table in &witnesses {
        assert!(verify_table(table, &axioms).unwrap());
        let TableValues::Scf(values) = &table.values else {
            panic!("expected SCF table");
        };
        let voter = (0..2)
            .find(|&v| {
                d.profiles
                    .iter()
                    .enumerate()
                    .all(|(i, p)| values[i] == AltSet::singleton(p.ballots()[v].top()))
            })
            .expect("census member is a dictatorship");
        dictators.push(voter);
    }
    dictators.sort_unstable();
    assert_eq!(dictators, vec![0, 1]);
    let gs_time = start.elapsed();
    assert!(gs_time < Duration::from_secs(600), "took {gs_time:?}");

    pass(
        "3",
        &format!("censuses 0/1/2 in {warmup_time:?} / {may_time:?} / {gs_time:?}"),
    );
}

#[test]
fn criterion_4_characterization_equivalences() {
    let bound = Duration::from_secs(10);

    let start = Instant::now();
    for p in enumerate_profiles(3, 3).unwrap() {
        let discrete =
            closest_consensus(&p, ConsensusClass::Unanimous, DistanceId::Discrete).unwrap();
        assert_eq!(discrete.winners, plurality(&p).winners);
        let swap = closest_consensus(&p, ConsensusClass::Unanimous, DistanceId::Swap).unwrap();
        assert_eq!(
            swap.winners,
            positional(&p, &ScoreVector::Borda).unwrap().winners
        );
        let strong =
            closest_consensus(&p, ConsensusClass::StrongUnanimous, DistanceId::Swap).unwrap();
        let k = kemeny(&p).unwrap();
        assert_eq!(strong.winners, k.choice.winners);
        assert_eq!(strong.min_distance, k.min_distance);
        let condorcet = closest_consensus(&p, ConsensusClass::Condorcet, DistanceId::Swap).unwrap();
        assert_eq!(condorcet.winners, dodgson(&p).unwrap().winners);
    }
    let consensus_time = start.elapsed();
    assert!(consensus_time < bound, "took {consensus_time:?}");

    let start = Instant::now();
    for p in enumerate_profiles(3, 2).unwrap() {
        assert_eq!(kemeny(&p).unwrap().choice.winners, plurality(&p).winners);
    }
    for (n, m) in [(3usize, 3usize), (2, 4)] {
        for p in enumerate_profiles(n, m).unwrap() {
            assert_eq!(
                symmetric_borda(&p).winners,
                positional(&p, &ScoreVector::Borda).unwrap().winners
            );
        }
    }
    for p in enumerate_profiles(3, 3).unwrap() {
        assert_eq!(
            borda_mle_winners(&p),
            positional(&p, &ScoreVector::Borda).unwrap().winners
        );
    }
    let identities_time = start.elapsed();
    assert!(identities_time < bound, "took {identities_time:?}");

    let start = Instant::now();
    let true_order = Ballot::new(vec![Alt(0), Alt(1), Alt(2), Alt(3)]).unwrap();
    let p = Accuracy::competent(ratio(2, 3)).unwrap();
    for seed in 0..100 {
        let ballots = sample_tournament_profile(&true_order, &p, 5, seed).unwrap();
        assert_eq!(
            mle_rankings(&ballots, &p).unwrap(),
            min_disagreement_rankings(&ballots).unwrap(),
            "seed {seed}"
        );
    }
    let mle_time = start.elapsed();
    assert!(mle_time < bound, "took {mle_time:?}");

    pass(
        "4",
        &format!(
            "consensus/identities/mle equivalences in {consensus_time:?} / {identities_time:?} / {mle_time:?}"
        ),
    );
}

#[test]
fn criterion_5a_black_suite_odd() {
    let start = Instant::now();
    let report = black_suite(3, 3).unwrap();
    assert_eq!(report.profiles_checked, 64);
    assert!(report.strict_transitivity.is_empty());
    assert!(report.weak_transitivity.is_empty());
    assert!(report.median_condorcet.is_empty());
    assert!(report.median_manipulation.is_empty());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass(
        "5a",
        &format!("64 odd-n single-peaked profiles in {elapsed:?}"),
    );
}

#[test]
fn criterion_5b_black_suite_even_median() {
    let start = Instant::now();
    let report = black_suite(4, 3).unwrap();
    assert_eq!(report.profiles_checked, 256);
    assert!(report.median_condorcet.is_empty());
    // the strict part of the weak tournament stays transitive throughout
    assert!(report.strict_transitivity.is_empty());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass(
        "5b",
        &format!("median within weak Condorcet winners on 256 profiles in {elapsed:?}"),
    );
}

#[test]
fn criterion_5c_black_suite_even_weak_transitivity() {
    // Stated claim: the weak majority tournament of every single-peaked
    // (4,3) profile is transitive. Exhaustive computation refutes it: with
    // 2 x abc and 2 x bca (both single-peaked on a>b>c) we get a ~ b,
    // a ~ c and b > c, so c >= a >= b without c >= b. Only the strict part
    // is transitive (criterion 5b). Asserted as stated; fails honestly.
    let report = black_suite(4, 3).unwrap();
    assert!(
        report.weak_transitivity.is_empty(),
        "weak-tournament transitivity fails on {} of {} single-peaked (4,3) profiles; \
         first counterexample:\n{}",
        report.weak_transitivity.len(),
        report.profiles_checked,
        scrutineer_core::format::render_profile(&report.weak_transitivity[0].profile),
    );
    pass("5c", "weak tournament transitive on all even-n profiles");
}

#[test]
fn criterion_6_ultrafilter_coalitions() {
    let start = Instant::now();

    // dictatorship SPF: all properties hold, the dictator is principal
    let dict_spf = spf_of(RuleHandle::new(RuleKind::Dictatorship(0)));
    let fams = decisive_coalitions(|p: &Profile| dict_spf.evaluate(p), 2, 3).unwrap();
    let report = ultrafilter_check(&fams.overall);
    assert!(report.is_ultrafilter());
    assert!(report.superset_closed);
    assert_eq!(report.principal_element, Some(0));

    // plurality SPF at (3,2): intersection closure fails; {0,1} and {1,2}
    // are both decisive while their intersection {1} is not
    let plur_spf = spf_of(RuleHandle::new(RuleKind::Plurality));
    let fams = decisive_coalitions(|p: &Profile| plur_spf.evaluate(p), 3, 2).unwrap();
    let report = ultrafilter_check(&fams.overall);
    assert!(report.grand_set && report.complement_dichotomy);
    assert!(!report.intersection_closed);
    assert!(fams.overall.contains(0b011) && fams.overall.contains(0b110));
    assert!(!fams.overall.contains(0b010));
    assert!(report.superset_closed);

    // superset closure follows from properties i-iii: exhaustive over all
    // 2^4 families on two voters, plus every family produced above
    for mask in 0u32..16 {
        let members: Vec<u64> = (0..4u64).filter(|i| mask >> i & 1 == 1).collect();
        let fam = CoalitionFamily::new(2, members).unwrap();
        let r = ultrafilter_check(&fam);
        if r.is_ultrafilter() {
            assert!(r.superset_closed, "family {mask:04b}");
        }
    }

    // contagion at (2,3): per-pair decisive families are contained in the
    // overall family for every SPF passing Pareto and IIA
    let d = Domain::new(2, 3).unwrap();
    let mut qualifying = 0;
    for (name, rule) in rule_catalog(2, 3) {
        let pareto = check_axiom_on(&d, &rule, AxiomId::ParetoSpf)
            .unwrap()
            .holds();
        let iia = check_axiom_on(&d, &rule, AxiomId::IiaSpf).unwrap().holds();
        if !(pareto && iia) {
            continue;
        }
        qualifying += 1;
        let spf = spf_of(rule);
        let fams = decisive_coalitions(|p: &Profile| spf.evaluate(p), 2, 3).unwrap();
        for ((x, y), family) in &fams.per_pair {
            for &coalition in family.members() {
                assert!(
                    fams.overall.contains(coalition),
                    "{name}: W^({},{}) escapes W",
                    x.0,
                    y.0
                );
            }
        }
    }
    assert!(qualifying >= 2);

    // blocking coalitions of a resolute dictatorship form the principal family
    let dict_lex =
        RuleHandle::new(RuleKind::Dictatorship(1)).with_tiebreak(TieBreak::Lexicographic);
    let fams = blocking_coalitions(|p: &Profile| dict_lex.winners(p), 2, 3).unwrap();
    let report = ultrafilter_check(&fams.overall);
    assert!(report.is_ultrafilter());
    assert_eq!(report.principal_element, Some(1));

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass("6", &format!("coalition structure verified in {elapsed:?}"));
}

#[test]
fn criterion_7a_hoeffding_bound() {
    for (num, den) in [(3i64, 5i64), (2, 3), (9, 10)] {
        let p = Accuracy::competent(ratio(num, den)).unwrap();
        for n in (1..=21u64).step_by(2) {
            let accuracy = jury_accuracy(n, &p).unwrap();
            assert!(
                hoeffding_bound_holds(n, &p, &accuracy),
                "bound fails at p = {num}/{den}, n = {n}"
            );
        }
    }
    pass(
        "7a",
        "1 - accuracy <= exp(-2n(p - 1/2)^2) on the whole grid",
    );
}

#[test]
fn criterion_7b_poa_direction() {
    // Stated claim: PoA(Borda+lex) <= PoA(plurality+lex) on the
    // exhaustively analyzed (3,3) domains. Exhaustive computation gives
    // PoA(plurality+lex) = 1/2 and PoA(Borda+lex) = 3/4 on both strategy
    // spaces (verified by hand on the witnesses), so the direction is
    // reversed at this scale. Asserted as stated; fails honestly.
    let plur = RuleHandle::new(RuleKind::Plurality).with_tiebreak(TieBreak::Lexicographic);
    let borda = RuleHandle::new(RuleKind::Positional(ScoreVector::Borda))
        .with_tiebreak(TieBreak::Lexicographic);
    for space in [StrategySpace::TopOnly, StrategySpace::FullOrders] {
        let plur_poa = dynamic_poa(&plur, 3, 3, space).unwrap();
        let borda_poa = dynamic_poa(&borda, 3, 3, space).unwrap();
        assert!(
            borda_poa.value <= plur_poa.value,
            "{space:?}: PoA(Borda+lex) = {} > PoA(plurality+lex) = {}; \
             the witnesses are reproducible (Borda: true profile {:?} reaching {:?})",
            borda_poa.value,
            plur_poa.value,
            scrutineer_core::format::render_profile(&borda_poa.true_profile),
            scrutineer_core::format::render_profile(&borda_poa.equilibrium_profile),
        );
    }
    pass("7b", "PoA(Borda+lex) <= PoA(plurality+lex) at (3,3)");
}

#[test]
fn criterion_8_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_scrutineer");
    let dir = std::env::temp_dir().join(format!("scrutineer-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["PLINY", "GORE", "YOUNG", "FALISZ", "BARBERA", "HIKERS"] {
        let p = fixture(name).unwrap();
        std::fs::write(
            dir.join(format!("{name}.prof")),
            scrutineer_core::format::render_profile(&p),
        )
        .unwrap();
    }
    let path = |name: &str| dir.join(format!("{name}.prof")).display().to_string();

    let invocations: Vec<Vec<String>> = vec![
        vec!["elect", "--rule", "plurality", "--profile", &path("PLINY")],
        vec!["elect", "--rule", "borda", "--profile", &path("GORE")],
        vec!["elect", "--rule", "kemeny", "--profile", &path("YOUNG")],
        vec![
            "elect",
            "--rule",
            "stv",
            "--profile",
            &path("PLINY"),
            "--trace",
        ],
        vec![
            "elect",
            "--rule",
            "median:l>m>s",
            "--profile",
            &path("HIKERS"),
        ],
        vec![
            "committee",
            "--rule",
            "pav",
            "--k",
            "2",
            "--profile",
            &path("FALISZ"),
        ],
        vec![
            "committee",
            "--rule",
            "cstv",
            "--k",
            "2",
            "--mode",
            "parallel",
            "--profile",
            &path("FALISZ"),
        ],
        vec![
            "committee",
            "--rule",
            "condorcet-committees",
            "--k",
            "2",
            "--profile",
            &path("BARBERA"),
        ],
        vec![
            "axiom",
            "--rule",
            "plurality",
            "--axiom",
            "monotonic",
            "--n",
            "3",
            "--m",
            "2",
        ],
        vec![
            "impossibility",
            "--n",
            "2",
            "--m",
            "3",
            "--kind",
            "scf",
            "--axioms",
            "resolute,non-imposed,strategy-proof",
        ],
        vec![
            "manipulate",
            "--rule",
            "plurality",
            "--profile",
            &path("PLINY"),
            "--voter",
            "302",
            "--tiebreak",
            "lex",
        ],
        vec![
            "jury",
            "--p",
            "2/3",
            "--n-max",
            "9",
            "--simulate",
            "20000",
            "--seed",
            "7",
        ],
        vec![
            "consensus",
            "--class",
            "c",
            "--distance",
            "swap",
            "--profile",
            &path("PLINY"),
        ],
        vec!["tournament", "--profile", &path("GORE")],
        vec!["fixtures", "--name", "YOUNG"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();

    for args in &invocations {
        let run = |jobs: &str| {
            let output = Command::new(bin)
                .args(args)
                .arg("--jobs")
                .arg(jobs)
                .output()
                .expect("spawn scrutineer");
            assert!(
                output.status.success(),
                "{args:?} failed: {}",
                String::from_utf8_lossy(&output.stderr)
            );
            output.stdout
        };
        let first = run("1");
        let second = run("1");
        let parallel = run("4");
        assert_eq!(first, second, "{args:?} differs across runs");
        assert_eq!(first, parallel, "{args:?} differs across --jobs");
    }
    std::fs::remove_dir_all(&dir).ok();
    pass(
        "8",
        &format!(
            "{} invocations byte-identical across runs and --jobs",
            invocations.len()
        ),
    );
}

/// Companion check for the census tables of criterion 3: the blocking
/// coalitions of each dictatorship table form that dictator's principal
/// ultrafilter (the computational content of the dictatorship proof).
#[test]
fn criterion_3_companion_blocking_structure() {
    let cfg = SearchConfig::default();
    let outcome = impossibility_search(
        2,
        3,
        SearchKind::Scf,
        &[
            AxiomId::Resolute,
            AxiomId::NonImposed,
            AxiomId::StrategyProof,
        ],
        &cfg,
    )
    .unwrap();
    let SearchOutcome::Census { witnesses, .. } = outcome else {
        panic!("expected census");
    };
    let d = Domain::new(2, 3).unwrap();
    for table in &witnesses {
        let TableValues::Scf(values) = &table.values else {
            panic!("expected SCF table");
        };
        let fams = blocking_coalitions(|p: &Profile| Ok(values[d.index_of(p)]), 2, 3).unwrap();
        let report = ultrafilter_check(&fams.overall);
        assert!(report.is_ultrafilter());
        assert!(report.principal_element.is_some());
    }
    pass("3+", "census tables have principal blocking families");
}

/// Committee rules always return nonempty sets of correctly sized
/// committees on the committee-selection fixture.
#[test]
fn criterion_1_companion_committee_sizes() {
    let falisz = fixture("FALISZ").unwrap();
    for k in 1..=5 {
        for result in [
            best_k(&ScoreVector::Plurality, &falisz, k).unwrap(),
            chamberlin_courant(&falisz, k, &ScoreVector::Borda).unwrap(),
            pav_k(&falisz, k).unwrap(),
        ] {
            assert!(!result.committees.is_empty());
            for c in &result.committees {
                assert_eq!(c.len(), k);
            }
        }
    }
    pass("1+", "committee sizes always k, outputs nonempty");
}
