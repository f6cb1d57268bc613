//! Output in the three formats. Human output is for terminals; TSV starts
//! with a header row; JSON is pretty-printed. Everything is rendered into a
//! buffer that the caller writes out.

use std::collections::BTreeMap;

use nbox::bounds::PascalFinding;
use nbox::{BigExact, BoundsEntry, Family, MBarValue, MValue, NeighborlinessReport, SearchResult};
use serde::Serialize;
use serde_json::json;

macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write;
        writeln!($out, $($arg)*).expect("writing to a String")
    }};
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Tsv,
    Json,
}

fn print_json<T: Serialize + ?Sized>(out: &mut String, value: &T) {
    emit!(out, "{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn verify(out: &mut String, family: &Family, report: &NeighborlinessReport, format: Format) {
    match format {
        Format::Json => print_json(out, report),
        Format::Tsv => {
            emit!(out, "valid\tmembers\tmin_distance\tmax_distance\tviolations");
            emit!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                report.valid,
                family.len(),
                opt(report.min_distance),
                opt(report.max_distance),
                report.violations.len()
            );
        }
        Format::Human => {
            let range = match (report.min_distance, report.max_distance) {
                (Some(lo), Some(hi)) => format!("distances in [{lo}, {hi}]"),
                _ => "no pairs".to_string(),
            };
            if report.valid {
                emit!(out, "valid: {} members, {}-neighborly, {range}", family.len(), report.k);
            } else {
                emit!(
                    out,
                    "invalid: {} violations of 1 <= d(x,y) <= {}, {range}",
                    report.violations.len(),
                    report.k
                );
                for v in report.violations.iter().take(20) {
                    let m = family.members();
                    emit!(
                        out,
                        "  #{} {} and #{} {}: distance {}",
                        v.i,
                        m[v.i],
                        v.j,
                        m[v.j],
                        v.distance
                    );
                }
                if report.violations.len() > 20 {
                    emit!(out, "  ... {} more", report.violations.len() - 20);
                }
            }
        }
    }
}

pub fn bounds(out: &mut String, entries: &[BoundsEntry<BigExact>], format: Format, grid: bool) {
    match format {
        Format::Json if grid => print_json(out, entries),
        Format::Json => print_json(out, &entries[0]),
        Format::Tsv => {
            emit!(out, "k\td\tlower\tlower_method\tupper\tupper_method\texact");
            for e in entries {
                emit!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    e.k,
                    e.d,
                    e.lower.value,
                    e.lower.method,
                    e.upper.value,
                    e.upper.method,
                    e.is_exact()
                );
            }
        }
        Format::Human if grid => human_grid(out, entries),
        Format::Human => {
            for e in entries {
                if e.is_exact() {
                    emit!(out, "n({},{}) = {}  ({})", e.k, e.d, e.lower.value, e.lower.method);
                } else {
                    emit!(out, "{} <= n({},{}) <= {}", e.lower.value, e.k, e.d, e.upper.value);
                    emit!(out, "  lower: {}", e.lower.method);
                    emit!(out, "  upper: {}", e.upper.method);
                }
            }
        }
    }
}

/// Rows are dimensions, columns are k; a cell is the exact value or
/// `lower-upper`.
fn human_grid(out: &mut String, entries: &[BoundsEntry<BigExact>]) {
    let kmax = entries.iter().map(|e| e.k).max().unwrap_or(0);
    let mut rows: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for e in entries {
        let cell = if e.is_exact() {
            e.lower.value.to_string()
        } else {
            format!("{}-{}", e.lower.value, e.upper.value)
        };
        rows.entry(e.d).or_insert_with(|| vec![String::new(); kmax])[e.k - 1] = cell;
    }
    let width = entries
        .iter()
        .map(|e| format!("{}-{}", e.lower.value, e.upper.value).len())
        .max()
        .unwrap_or(1)
        .max(3);
    let header: String = (1..=kmax).map(|k| format!(" {:>width$}", format!("k={k}"))).collect();
    emit!(out, "{:>4}{header}", "d");
    for (d, cells) in rows {
        let line: String = cells.iter().map(|c| format!(" {c:>width$}")).collect();
        emit!(out, "{d:>4}{line}");
    }
}

pub fn mkd(out: &mut String, k: usize, d: usize, m: &MValue<BigExact>, mbar: &MBarValue<BigExact>, format: Format) {
    let parts = || joined(mbar.parts.iter().map(|p| format!("({},{})", p.plan.k, p.plan.d)), "x");
    match format {
        Format::Json => print_json(out, &json!({"k": k, "d": d, "m": m, "mbar": mbar})),
        Format::Tsv => {
            emit!(out, "k\td\tm\tblocks\ta\tmbar\tparts");
            emit!(
                out,
                "{k}\t{d}\t{}\t{}\t{}\t{}\t{}",
                m.value,
                m.plan.m,
                joined(&m.plan.a, ","),
                mbar.value,
                parts()
            );
        }
        Format::Human => {
            emit!(
                out,
                "m({k},{d}) = {}  with m = {}, a = ({})",
                m.value,
                m.plan.m,
                joined(&m.plan.a, ", ")
            );
            if !m.balanced_optimal {
                emit!(out, "  an unbalanced width vector beats the balanced one");
            }
            if !m.exhaustive {
                emit!(out, "  width vectors were sampled, not scanned exhaustively");
            }
            emit!(out, "mbar({k},{d}) = {}  as {}", mbar.value, parts());
        }
    }
}

pub fn audit(out: &mut String, findings: &[PascalFinding<BigExact>], format: Format) {
    let violated: Vec<_> = findings.iter().filter(|f| f.violated).collect();
    match format {
        Format::Json => print_json(out, &json!({"checked": findings.len(), "violations": violated})),
        Format::Tsv => {
            emit!(out, "k\td\tlower\trhs\tviolated");
            for f in findings {
                emit!(out, "{}\t{}\t{}\t{}\t{}", f.k, f.d, f.lower, f.rhs, f.violated);
            }
        }
        Format::Human => {
            emit!(out, "{} cells checked, {} violations", findings.len(), violated.len());
            for f in violated {
                emit!(out, "  ({},{}): lower {} > {}", f.k, f.d, f.lower, f.rhs);
            }
        }
    }
}

fn member_strings(f: &Family) -> Vec<String> {
    f.iter().map(ToString::to_string).collect()
}

/// A sequence of families: blank-line separated .nbx, one TSV row each,
/// or a JSON array of string arrays.
pub fn families(out: &mut String, list: &[Family], format: Format) {
    match format {
        Format::Json => print_json(out, &list.iter().map(member_strings).collect::<Vec<_>>()),
        Format::Tsv => {
            emit!(out, "index\tsize\tmembers");
            for (i, f) in list.iter().enumerate() {
                emit!(out, "{i}\t{}\t{}", f.len(), member_strings(f).join(","));
            }
        }
        Format::Human => {
            for (i, f) in list.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&f.to_nbx());
            }
        }
    }
}

pub fn search(out: &mut String, r: &SearchResult, format: Format) {
    let witness = || joined(&r.witness, ",");
    match format {
        Format::Json => print_json(out, r),
        Format::Tsv => {
            emit!(
                out,
                "k\td\toptimum\tproven_optimal\tnodes\telapsed_ms\tcandidates\twitness"
            );
            emit!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.k,
                r.d,
                r.optimum,
                r.proven_optimal,
                r.stats.nodes,
                r.stats.elapsed.as_millis(),
                r.stats.candidates,
                witness()
            );
        }
        Format::Human => {
            let status = if r.proven_optimal {
                "proven optimal"
            } else {
                "budget exhausted, best found"
            };
            emit!(out, "n({},{}) = {}  ({status})", r.k, r.d, r.optimum);
            emit!(
                out,
                "{} nodes, {} ms, {} candidates",
                r.stats.nodes,
                r.stats.elapsed.as_millis(),
                r.stats.candidates
            );
            for x in &r.witness {
                emit!(out, "{x}");
            }
        }
    }
}

pub fn enumeration(out: &mut String, k: usize, d: usize, list: &[Family], format: Format) {
    match format {
        Format::Json => {
            let size = list.first().map_or(0, Family::len);
            let fams: Vec<_> = list.iter().map(member_strings).collect();
            print_json(
                out,
                &json!({"k": k, "d": d, "optimum": size, "count": list.len(), "families": fams}),
            );
        }
        Format::Human => {
            let size = list.first().map_or(0, Family::len);
            emit!(
                out,
                "{} maximum families of size {size} for (k,d) = ({k},{d})",
                list.len()
            );
            out.push('\n');
            families(out, list, format);
        }
        Format::Tsv => families(out, list, format),
    }
}
