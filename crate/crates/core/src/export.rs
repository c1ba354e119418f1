//! Tables, matrices and subgroup-lattice graphs for downstream tools, and
//! the matching importers for exported matrices.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::burnside::{CyclicBurnside, ElementaryBurnside, GroupFamily, TPrimeGenerator};
use crate::error::{domain, Error, Result};
use crate::gfp::Caps;
use crate::intlat::{kernel_lattice, IntMatrix};
use crate::repq::{CyclicReps, ElementaryReps, RepElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Artifact {
    Basis,
    MatrixF,
    MatrixFPrime,
    MatrixT,
    Kernel,
    LatticeDot,
}

impl FromStr for Artifact {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "basis" => Artifact::Basis,
            "matrix-f" => Artifact::MatrixF,
            "matrix-fprime" => Artifact::MatrixFPrime,
            "matrix-t" => Artifact::MatrixT,
            "kernel" => Artifact::Kernel,
            "lattice-dot" => Artifact::LatticeDot,
            other => return domain(format!("unknown artifact {other:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "text" => Format::Text,
            "csv" => Format::Csv,
            "json" => Format::Json,
            "dot" => Format::Dot,
            other => return domain(format!("unknown format {other:?}")),
        })
    }
}

/// A header and string cells; every exported table goes through this.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(&self.columns).map_err(io_err)?;
        for row in &self.rows {
            w.write_record(row).map_err(io_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Resource(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Resource(e.to_string()))
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(text.as_bytes());
        let columns = r
            .headers()
            .map_err(parse_err)?
            .iter()
            .map(str::to_owned)
            .collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(str::to_owned).collect()))
            .collect::<std::result::Result<Vec<Vec<String>>, _>>()
            .map_err(parse_err)?;
        Ok(Table { columns, rows })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("malformed table: {e}")))
    }

    /// Columns padded to a common width.
    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_owned() + "\n"
        };
        let mut out = line(&self.columns);
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

fn io_err(e: csv::Error) -> Error {
    Error::Resource(e.to_string())
}

fn parse_err(e: csv::Error) -> Error {
    Error::Domain(format!("malformed CSV: {e}"))
}

/// An integer matrix with labeled rows and columns. As a table the first
/// column holds the row labels and its header is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledMatrix {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub matrix: IntMatrix,
}

impl LabeledMatrix {
    pub fn to_table(&self) -> Table {
        let mut columns = vec![String::new()];
        columns.extend(self.col_labels.iter().cloned());
        let rows = self
            .row_labels
            .iter()
            .enumerate()
            .map(|(i, label)| {
                let mut row = vec![label.clone()];
                row.extend(self.matrix.row(i).iter().map(BigInt::to_string));
                row
            })
            .collect();
        Table { columns, rows }
    }

    pub fn from_table(t: &Table) -> Result<Self> {
        if t.columns.first().map(String::as_str) != Some("") {
            return domain("matrix table must start with an empty header cell");
        }
        let col_labels = t.columns[1..].to_vec();
        let mut row_labels = Vec::with_capacity(t.rows.len());
        let mut data = Vec::with_capacity(t.rows.len());
        for (i, row) in t.rows.iter().enumerate() {
            if row.len() != t.columns.len() {
                return domain(format!(
                    "row {} has {} cells, expected {}",
                    i + 1,
                    row.len(),
                    t.columns.len()
                ));
            }
            row_labels.push(row[0].clone());
            let entries = row[1..]
                .iter()
                .map(|c| {
                    c.trim().parse::<BigInt>().map_err(|_| {
                        Error::Domain(format!("row {}: {c:?} is not an integer", i + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            data.push(entries);
        }
        let matrix = IntMatrix::from_rows(data, col_labels.len())?;
        Ok(LabeledMatrix {
            row_labels,
            col_labels,
            matrix,
        })
    }

    /// Reads either export format, deciding by the first non-blank byte.
    pub fn parse(text: &str) -> Result<Self> {
        let t = if text.trim_start().starts_with('{') {
            Table::from_json(text)?
        } else {
            Table::from_csv(text)?
        };
        Self::from_table(&t)
    }
}

/// Export output before formatting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rendered {
    Table(Table),
    Dot(String),
}

impl Rendered {
    pub fn format(&self, format: Format) -> Result<String> {
        match (self, format) {
            (Rendered::Table(t), Format::Csv) => t.to_csv(),
            (Rendered::Table(t), Format::Json) => Ok(t.to_json()),
            (Rendered::Table(t), Format::Text) => Ok(t.to_text()),
            (Rendered::Dot(d), Format::Dot | Format::Text) => Ok(d.clone()),
            (Rendered::Table(_), Format::Dot) => domain("only lattice-dot can be written as dot"),
            (Rendered::Dot(_), _) => domain("lattice-dot can only be written as dot"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExportOptions {
    /// Restrict to the relative module (`A'`, `t'`, `N'`).
    pub relative: bool,
    /// `E_i` or `E_i-E_j` for lattice-dot.
    pub highlight: Option<String>,
}

pub fn export(
    family: GroupFamily,
    artifact: Artifact,
    opts: &ExportOptions,
    caps: &Caps,
) -> Result<Rendered> {
    if opts.highlight.is_some() && artifact != Artifact::LatticeDot {
        return domain("--highlight only applies to lattice-dot");
    }
    match family {
        GroupFamily::ElementaryAbelian { p, n } => {
            let a = ElementaryBurnside::with_caps(p, n, caps)?;
            let r = ElementaryReps::for_burnside(&a);
            Ok(match artifact {
                Artifact::Basis => Rendered::Table(elementary_basis(&a, opts.relative)),
                Artifact::MatrixF if !opts.relative => {
                    Rendered::Table(matrix_f(&a, &r)?.to_table())
                }
                Artifact::MatrixF | Artifact::MatrixFPrime => {
                    Rendered::Table(matrix_f_prime(&a, &r)?.to_table())
                }
                Artifact::MatrixT if opts.relative => {
                    Rendered::Table(matrix_t_prime(&a)?.to_table())
                }
                Artifact::MatrixT => Rendered::Table(matrix_t(&a)?.to_table()),
                Artifact::Kernel => {
                    Rendered::Table(elementary_kernel(&a, &r, opts.relative)?.to_table())
                }
                Artifact::LatticeDot => Rendered::Dot(lattice_dot(&a, opts.highlight.as_deref())?),
            })
        }
        GroupFamily::CyclicCrossZp { p, k } => {
            let a = CyclicBurnside::with_caps(p, k, caps)?;
            let r = CyclicReps::for_burnside(&a);
            Ok(match artifact {
                Artifact::Basis => Rendered::Table(cyclic_basis(&a)),
                Artifact::MatrixF => Rendered::Table(cyclic_matrix_f(&a, &r)?.to_table()),
                Artifact::MatrixFPrime => {
                    Rendered::Table(cyclic_matrix_f_prime(&a, &r)?.to_table())
                }
                Artifact::Kernel => {
                    let fp = cyclic_matrix_f_prime(&a, &r)?;
                    Rendered::Table(kernel_table(&fp.matrix, fp.row_labels).to_table())
                }
                Artifact::MatrixT | Artifact::LatticeDot => {
                    return domain("the cyclic family carries only its relative Burnside module")
                }
            })
        }
    }
}

fn subgroup_labels(idx: impl IntoIterator<Item = usize>) -> Vec<String> {
    idx.into_iter().map(ElementaryBurnside::label).collect()
}

fn elementary_basis(a: &ElementaryBurnside, relative: bool) -> Table {
    let idx: Vec<usize> = if relative {
        a.relative().to_vec()
    } else {
        (0..a.rank()).collect()
    };
    let e = a.distinguished();
    let rows = idx
        .into_iter()
        .map(|i| {
            let s = a.subspace(i);
            vec![
                ElementaryBurnside::label(i),
                s.dim().to_string(),
                s.to_string(),
                (!s.contains(&e).expect("same ambient")).to_string(),
            ]
        })
        .collect();
    Table {
        columns: ["label", "dim", "generators", "avoids_e"]
            .map(String::from)
            .to_vec(),
        rows,
    }
}

fn cyclic_basis(a: &CyclicBurnside) -> Table {
    let rows = a
        .pairs()
        .iter()
        .enumerate()
        .map(|(i, &(nu, rho))| {
            let (g, h) = a.graph_generator(nu, rho);
            vec![
                format!("b_{}", i + 1),
                nu.to_string(),
                rho.to_string(),
                format!("<({g},{h})>"),
            ]
        })
        .collect();
    Table {
        columns: ["label", "nu", "rho", "graph"].map(String::from).to_vec(),
        rows,
    }
}

fn irreducible_labels<T: std::fmt::Display>(irr: &[T]) -> Vec<String> {
    irr.iter().map(ToString::to_string).collect()
}

/// `irr + c Q` for an `R'` basis element.
fn rep_basis_labels<T: std::fmt::Display>(irr: &[T], basis: &[RepElement]) -> Vec<String> {
    basis
        .iter()
        .map(|b| {
            let i = (1..b.coeffs.len())
                .find(|&i| b.coeffs[i] == 1)
                .expect("basis element names an irreducible");
            format!("{}{:+}Q", irr[i], b.coeffs[0])
        })
        .collect()
}

pub fn matrix_f(a: &ElementaryBurnside, r: &ElementaryReps) -> Result<LabeledMatrix> {
    Ok(LabeledMatrix {
        row_labels: subgroup_labels(0..a.rank()),
        col_labels: irreducible_labels(r.irreducibles()),
        matrix: r.f_matrix(a)?,
    })
}

pub fn matrix_f_prime(a: &ElementaryBurnside, r: &ElementaryReps) -> Result<LabeledMatrix> {
    Ok(LabeledMatrix {
        row_labels: subgroup_labels(a.relative().iter().copied()),
        col_labels: rep_basis_labels(r.irreducibles(), &r.relative_rep_basis()),
        matrix: r.f_prime_matrix(a)?,
    })
}

pub fn matrix_t(a: &ElementaryBurnside) -> Result<LabeledMatrix> {
    Ok(LabeledMatrix {
        row_labels: subgroup_labels(a.t_domain()),
        col_labels: subgroup_labels(0..a.rank()),
        matrix: a.t_matrix()?,
    })
}

fn generator_label(g: TPrimeGenerator) -> String {
    match g {
        TPrimeGenerator::Basis(i) => ElementaryBurnside::label(i),
        TPrimeGenerator::Difference { plus, minus } => {
            format!(
                "{}-{}",
                ElementaryBurnside::label(plus),
                ElementaryBurnside::label(minus)
            )
        }
    }
}

pub fn matrix_t_prime(a: &ElementaryBurnside) -> Result<LabeledMatrix> {
    Ok(LabeledMatrix {
        row_labels: a
            .t_prime_domain()
            .into_iter()
            .map(generator_label)
            .collect(),
        col_labels: subgroup_labels(a.relative().iter().copied()),
        matrix: a.t_prime_matrix()?,
    })
}

fn kernel_table(f: &IntMatrix, col_labels: Vec<String>) -> LabeledMatrix {
    let kernel = kernel_lattice(f);
    LabeledMatrix {
        row_labels: (1..=kernel.rank()).map(|i| format!("n_{i}")).collect(),
        col_labels,
        matrix: kernel.basis().clone(),
    }
}

fn elementary_kernel(
    a: &ElementaryBurnside,
    r: &ElementaryReps,
    relative: bool,
) -> Result<LabeledMatrix> {
    let f = if relative {
        matrix_f_prime(a, r)?
    } else {
        matrix_f(a, r)?
    };
    Ok(kernel_table(&f.matrix, f.row_labels))
}

fn cyclic_matrix_f(a: &CyclicBurnside, r: &CyclicReps) -> Result<LabeledMatrix> {
    Ok(LabeledMatrix {
        row_labels: cyclic_basis(a)
            .rows
            .into_iter()
            .map(|mut row| row.swap_remove(0))
            .collect(),
        col_labels: irreducible_labels(r.irreducibles()),
        matrix: r.f_matrix(a)?,
    })
}

fn cyclic_matrix_f_prime(a: &CyclicBurnside, r: &CyclicReps) -> Result<LabeledMatrix> {
    Ok(LabeledMatrix {
        row_labels: cyclic_basis(a)
            .rows
            .into_iter()
            .map(|mut row| row.swap_remove(0))
            .collect(),
        col_labels: rep_basis_labels(r.irreducibles(), &r.relative_rep_basis()),
        matrix: r.f_prime_matrix(a)?,
    })
}

fn parse_e_label(a: &ElementaryBurnside, s: &str) -> Result<usize> {
    let digits = s
        .strip_prefix("E_")
        .or_else(|| s.strip_prefix("e_"))
        .ok_or_else(|| Error::Domain(format!("highlight term {s:?} must look like E_i")))?;
    match digits.parse::<usize>() {
        Ok(i) if (1..=a.rank()).contains(&i) => Ok(i - 1),
        _ => domain(format!(
            "highlight term {s:?} is not among e_1..e_{}",
            a.rank()
        )),
    }
}

/// Vertices of the subgraph `E_i`, the support of `t(e_i)`, or of
/// `E_i - E_j`, drawn as the union of both supports.
pub fn highlight_vertices(a: &ElementaryBurnside, expr: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for term in expr.split('-') {
        let i = parse_e_label(a, term.trim())?;
        let img = a.t_image(a.subspace(i))?;
        out.extend(
            img.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(j, _)| j),
        );
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The subgroup lattice as a directed graph, one vertex per subgroup and an
/// edge from each subgroup to every supergroup of index `p`.
pub fn lattice_dot(a: &ElementaryBurnside, highlight: Option<&str>) -> Result<String> {
    let marked = match highlight {
        Some(expr) => highlight_vertices(a, expr)?,
        None => Vec::new(),
    };
    let mut out = String::new();
    let _ = writeln!(out, "digraph subgroup_lattice {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=ellipse];");
    for (i, s) in a.basis().iter().enumerate() {
        let label = ElementaryBurnside::label(i);
        let style = if marked.binary_search(&i).is_ok() {
            ", style=filled, fillcolor=lightblue"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {label} [label=\"{label}\", tooltip=\"{s}\"{style}];"
        );
    }
    for (i, j) in a.covering_pairs() {
        let _ = writeln!(
            out,
            "  {} -> {};",
            ElementaryBurnside::label(i),
            ElementaryBurnside::label(j)
        );
    }
    let _ = writeln!(out, "}}");
    Ok(out)
}
