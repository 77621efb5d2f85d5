//! Report rendering contracts: byte determinism, self-describing headers,
//! fixed decimal formatting, and figure-data spot values.

use qprimes_cli::commands::{self, Engine, FigureId, ReportOptions, TableId};
use qprimes_cli::report::OutputFormat;

#[test]
fn csv_is_byte_deterministic() {
    let opts = ReportOptions::default();
    let a = commands::cmd_table(TableId::T53, &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    let b = commands::cmd_table(TableId::T53, &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    assert_eq!(a, b);
    let a = commands::cmd_figure(FigureId::F51, Some(50), &opts)
        .unwrap()
        .render(OutputFormat::Json);
    let b = commands::cmd_figure(FigureId::F51, Some(50), &opts)
        .unwrap()
        .render(OutputFormat::Json);
    assert_eq!(a, b);
}

#[test]
fn every_report_header_is_self_describing() {
    let opts = ReportOptions::default();
    let csv = commands::cmd_figure(FigureId::F71, Some(10), &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    let header = csv.lines().next().unwrap();
    for key in ["a_prime=", "band=", "mode=", "engine=", "ceiling="] {
        assert!(header.contains(key), "missing {key} in {header}");
    }
}

#[test]
fn cumulative_table_renders_exact_integers() {
    let opts = ReportOptions::default();
    let csv = commands::cmd_table(TableId::T51, &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[1],
        "n0,model_cumulative,ref_model,delta_model,oracle_pi,ref_oracle,delta_oracle"
    );
    assert_eq!(lines[2], "10,24,26,2,30,30,0");
    assert_eq!(lines[3], "20,77,80,3,85,85,0");
    assert_eq!(lines[4], "30,157,161,4,162,162,0");
    assert_eq!(lines[5], "40,259,266,7,263,263,0");
}

#[test]
fn scalar_count_report_on_both_engines() {
    let mut opts = ReportOptions::default();
    let csv = commands::cmd_pi(122, &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    assert!(csv.ends_with("x,sigma,pi\n122,92,30\n"));
    opts.engine = Engine::Exact;
    let csv = commands::cmd_pi(168, &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    assert!(csv.contains("engine=exact"));
    assert!(csv.ends_with("168,129,39\n"));
}

#[test]
fn exact_engine_cap_points_to_the_oracle() {
    let opts = ReportOptions {
        engine: Engine::Exact,
        ..ReportOptions::default()
    };
    let err = commands::cmd_pi(10_000_001, &opts).unwrap_err();
    assert!(err.to_string().contains("use the sieve oracle"));
}

#[test]
fn twin_figure_zero_rows_match_the_published_list() {
    let opts = ReportOptions::default();
    let report = commands::cmd_figure(FigureId::F71, Some(122), &opts).unwrap();
    let zeros: Vec<u64> = report
        .rows
        .iter()
        .filter(|r| r[1] == "0")
        .map(|r| r[0].parse().unwrap())
        .collect();
    assert_eq!(zeros, vec![1, 9, 19, 26, 27, 30, 34, 39, 49, 53, 77, 122]);
}

#[test]
fn figure_defaults_cover_the_published_ranges() {
    let opts = ReportOptions::default();
    assert_eq!(
        commands::cmd_figure(FigureId::F51, None, &opts)
            .unwrap()
            .rows
            .len(),
        240
    );
    assert_eq!(
        commands::cmd_figure(FigureId::F71, None, &opts)
            .unwrap()
            .rows
            .len(),
        915
    );
    assert_eq!(
        commands::cmd_figure(FigureId::F81, None, &opts)
            .unwrap()
            .rows
            .len(),
        30
    );
    assert_eq!(
        commands::cmd_figure(FigureId::F91, None, &opts)
            .unwrap()
            .rows
            .len(),
        162
    );
}

#[test]
fn biquadratic_figure_carries_interval_and_cumulative_counts() {
    let opts = ReportOptions::default();
    let report = commands::cmd_figure(FigureId::F81, None, &opts).unwrap();
    // (10^4, 11^4] holds exactly one quadruplet (starting at 13001)
    let row10 = report.rows.iter().find(|r| r[0] == "10").unwrap();
    assert_eq!(row10[1], "1");
    let row14 = report.rows.iter().find(|r| r[0] == "14").unwrap();
    assert_eq!(row14[1], "1");
    // running sum of contained counts: 12 through (11)^4, 156 through (31)^4
    assert_eq!(row10[2], "12");
    let last = report.rows.last().unwrap();
    assert_eq!(last[2], "156");
    assert_eq!(last[4], ""); // no band for quadruplets
}

#[test]
fn observed_cells_go_empty_above_the_ceiling() {
    let opts = ReportOptions {
        ceiling: 1_000_000,
        ..ReportOptions::default()
    };
    let report = commands::cmd_table(TableId::T52, &opts).unwrap();
    let row = report.rows.iter().find(|r| r[0] == "1000000").unwrap();
    assert_eq!(row[1], "", "interval above the ceiling must stay empty");
    let row = report.rows.iter().find(|r| r[0] == "100").unwrap();
    assert_eq!(row[1], "23");
}

#[test]
fn divisibility_report_spells_the_clause() {
    let opts = ReportOptions::default();
    let csv = commands::cmd_divisibility(11, &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    assert!(csv.contains("11,23,prime_3mod4,true,false,"));
    let csv = commands::cmd_divisibility(9, &opts)
        .unwrap()
        .render(OutputFormat::Csv);
    assert!(csv.contains("9,19,out_of_scope,false,true,false"));
}

#[test]
fn check_commands_flag_violations_via_the_report() {
    let opts = ReportOptions::default();
    let (report, found) = commands::cmd_gapcheck(1_000_000, &opts).unwrap();
    assert!(!found);
    assert!(report
        .params
        .iter()
        .any(|(k, v)| k == "violations" && v == "0"));
    let (report, found) = commands::cmd_divisibility_sweep(100_000, &opts).unwrap();
    assert!(!found);
    assert!(report.rows.is_empty());
}
