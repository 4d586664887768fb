//! Human tables and versioned JSON for each subcommand.
//!
//! Every JSON document carries `"schema": "fjh/1"`.

use serde::Serialize;

use fjh_core::grading::Grading;
use fjh_core::group::{describe, CharacterTable, FactorMultiset, FiniteGroup, GroupFile};
use fjh_core::ring::{FPDimData, FusionRing, ValidationReport};
use fjh_core::series::{CentralSeriesRecord, JordanHolderReport};

const SCHEMA: &str = "fjh/1";

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output serializes")
    );
}

#[derive(Serialize)]
struct ViolationOut {
    class: String,
    witness: Vec<usize>,
    detail: String,
}

#[derive(Serialize)]
struct ValidateOut {
    schema: &'static str,
    ok: bool,
    violations: Vec<ViolationOut>,
}

pub fn validation(report: &ValidationReport, json: bool) {
    if json {
        emit(&ValidateOut {
            schema: SCHEMA,
            ok: report.ok,
            violations: report
                .violations
                .iter()
                .map(|v| ViolationOut {
                    class: v.class.to_string(),
                    witness: v.witness.clone(),
                    detail: v.detail.clone(),
                })
                .collect(),
        });
    } else if report.ok {
        println!("ok: all fusion-ring axioms hold");
    } else {
        println!("invalid:");
        for v in &report.violations {
            println!("  {} at {:?}: {}", v.class, v.witness, v.detail);
        }
    }
}

#[derive(Serialize)]
struct FpdimOut {
    schema: &'static str,
    dims: Vec<FpdimEntry>,
    total: f64,
}

#[derive(Serialize)]
struct FpdimEntry {
    index: usize,
    label: String,
    dim: f64,
}

pub fn fpdim(ring: &FusionRing, data: &FPDimData, json: bool) {
    if json {
        emit(&FpdimOut {
            schema: SCHEMA,
            dims: data
                .dims
                .iter()
                .enumerate()
                .map(|(i, &d)| FpdimEntry {
                    index: i,
                    label: ring.label(i).to_string(),
                    dim: d,
                })
                .collect(),
            total: data.total,
        });
    } else {
        let width = ring
            .labels()
            .iter()
            .map(|l| l.len())
            .max()
            .unwrap_or(1)
            .max(5);
        println!("{:<width$}  FPdim", "label");
        for (i, &d) in data.dims.iter().enumerate() {
            println!("{:<width$}  {:.9}", ring.label(i), d);
        }
        println!("total FPdim: {:.9}", data.total);
    }
}

#[derive(Serialize)]
struct GradingOut {
    schema: &'static str,
    group: GroupFile,
    descriptor: String,
    degree: Vec<usize>,
    components: Vec<Vec<usize>>,
}

pub fn grading(ring: &FusionRing, grading: &Grading, full: bool, json: bool) {
    if json {
        emit(&GradingOut {
            schema: SCHEMA,
            group: GroupFile::from_group(&grading.group),
            descriptor: describe(&grading.group).to_string(),
            degree: grading.degree.clone(),
            components: grading.components(),
        });
        return;
    }
    println!(
        "universal grading group: order {} ({})",
        grading.group.order(),
        describe(&grading.group)
    );
    for (g, component) in grading.components().iter().enumerate() {
        let labels: Vec<&str> = component.iter().map(|&i| ring.label(i)).collect();
        println!(
            "  component {}: {}",
            grading.group.label(g),
            labels.join(", ")
        );
    }
    if full {
        println!("Cayley table:");
        for row in grading.group.table_rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            println!("  {}", cells.join(" "));
        }
    }
}

#[derive(Serialize)]
struct SeriesOut {
    schema: &'static str,
    chain: Vec<Vec<usize>>,
    factors: Vec<String>,
    length: usize,
}

fn series_out(record: &CentralSeriesRecord) -> SeriesOut {
    SeriesOut {
        schema: SCHEMA,
        chain: record.chain.iter().map(|s| s.members().to_vec()).collect(),
        factors: record
            .factors
            .iter()
            .map(|g| describe(g).to_string())
            .collect(),
        length: record.length(),
    }
}

fn print_series(ring: &FusionRing, record: &CentralSeriesRecord) {
    for (i, sub) in record.chain.iter().enumerate() {
        let labels: Vec<&str> = sub.members().iter().map(|&x| ring.label(x)).collect();
        if i == 0 {
            println!("  R0 = {{{}}}", labels.join(", "));
        } else {
            println!(
                "  R{i} = {{{}}}   (extension of R{} by {})",
                labels.join(", "),
                i - 1,
                describe(&record.factors[i - 1])
            );
        }
    }
}

pub fn series(ring: &FusionRing, record: &CentralSeriesRecord, json: bool) {
    if json {
        emit(&series_out(record));
        return;
    }
    println!(
        "composition series of length {} with factors {}",
        record.length(),
        record.factor_multiset()
    );
    print_series(ring, record);
}

#[derive(Serialize)]
struct AllSeriesOut {
    schema: &'static str,
    count: usize,
    jordan_holder_pass: bool,
    factors: String,
    series: Vec<SeriesOut>,
}

pub fn all_series(
    ring: &FusionRing,
    series: &[CentralSeriesRecord],
    report: &JordanHolderReport,
    json: bool,
) {
    if json {
        emit(&AllSeriesOut {
            schema: SCHEMA,
            count: report.series_count,
            jordan_holder_pass: report.pass,
            factors: series[0].factor_multiset().to_string(),
            series: series.iter().map(series_out).collect(),
        });
        return;
    }
    println!(
        "{} composition series; all factor multisets equal: {}",
        report.series_count, report.pass
    );
    println!("factors: {}", series[0].factor_multiset());
    if let Some(pair) = &report.counterexample {
        println!("counterexample (implementation bug):");
        print_series(ring, &pair.0);
        println!("  versus");
        print_series(ring, &pair.1);
    }
}

#[derive(Serialize)]
struct FactorsOut {
    schema: &'static str,
    factors: Vec<(String, usize)>,
    display: String,
    length: usize,
}

fn factors_out(factors: &FactorMultiset) -> FactorsOut {
    FactorsOut {
        schema: SCHEMA,
        factors: factors
            .iter()
            .map(|(d, m)| (d.to_string(), m))
            .collect(),
        display: factors.to_string(),
        length: factors.total(),
    }
}

pub fn factors(factors: &FactorMultiset, json: bool) {
    if json {
        emit(&factors_out(factors));
    } else {
        println!("composition factors: {factors}");
        println!("length: {}", factors.total());
    }
}

#[derive(Serialize)]
struct CompareOut {
    schema: &'static str,
    left: FactorsOut,
    right: FactorsOut,
    equal: bool,
}

pub fn compare(left: &FactorMultiset, right: &FactorMultiset, json: bool) {
    let equal = left == right;
    if json {
        emit(&CompareOut {
            schema: SCHEMA,
            left: factors_out(left),
            right: factors_out(right),
            equal,
        });
    } else {
        println!("left:  {left} (length {})", left.total());
        println!("right: {right} (length {})", right.total());
        println!("equal: {equal}");
    }
}

#[derive(Serialize)]
struct GroupFactorsOut {
    schema: &'static str,
    order: usize,
    factors: Vec<(String, usize)>,
    display: String,
    length: usize,
}

pub fn group_factors(group: &FiniteGroup, factors: &FactorMultiset, json: bool) {
    if json {
        emit(&GroupFactorsOut {
            schema: SCHEMA,
            order: group.order(),
            factors: factors.iter().map(|(d, m)| (d.to_string(), m)).collect(),
            display: factors.to_string(),
            length: factors.total(),
        });
    } else {
        println!("group of order {}", group.order());
        println!("composition factors: {factors}");
        println!("length: {}", factors.total());
    }
}

#[derive(Serialize)]
struct ZappaOut {
    schema: &'static str,
    order: usize,
    isomorphic_to_parent: bool,
    factors: Vec<(String, usize)>,
    display: String,
    length: usize,
}

pub fn zappa(product: &FiniteGroup, iso: bool, factors: &FactorMultiset, json: bool) {
    if json {
        emit(&ZappaOut {
            schema: SCHEMA,
            order: product.order(),
            isomorphic_to_parent: iso,
            factors: factors.iter().map(|(d, m)| (d.to_string(), m)).collect(),
            display: factors.to_string(),
            length: factors.total(),
        });
    } else {
        println!("zappa-szep product: order {}", product.order());
        println!("isomorphic to ambient group: {iso}");
        println!("composition factors: {factors}");
        println!("length: {}", factors.total());
    }
}

#[derive(Serialize)]
struct ChartableOut {
    schema: &'static str,
    order: usize,
    classes: Vec<ClassOut>,
    degrees: Vec<u64>,
    /// rows × classes, values as [re, im]
    values: Vec<Vec<(f64, f64)>>,
}

#[derive(Serialize)]
struct ClassOut {
    representative: String,
    size: usize,
    element_order: usize,
}

pub fn chartable(group: &FiniteGroup, table: &CharacterTable, json: bool) {
    let classes: Vec<ClassOut> = table
        .classes
        .classes
        .iter()
        .map(|c| ClassOut {
            representative: group.label(c[0]).to_string(),
            size: c.len(),
            element_order: group.element_order(c[0]),
        })
        .collect();
    if json {
        emit(&ChartableOut {
            schema: SCHEMA,
            order: group.order(),
            classes,
            degrees: table.degrees.clone(),
            values: table
                .values
                .iter()
                .map(|row| row.iter().map(|v| (v.re, v.im)).collect())
                .collect(),
        });
        return;
    }
    let fmt_value = |re: f64, im: f64| -> String {
        if im.abs() < 5e-5 {
            format!("{re:.4}")
        } else {
            format!("{re:.4}{im:+.4}i")
        }
    };
    println!("character table (order {}):", group.order());
    let header: Vec<String> = classes
        .iter()
        .map(|c| format!("{}({})", c.representative, c.size))
        .collect();
    println!("  deg | {}", header.join("  "));
    for (r, row) in table.values.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| fmt_value(v.re, v.im)).collect();
        println!("  {:>3} | {}", table.degrees[r], cells.join("  "));
    }
}
