use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hypvol_core::bipyramid::{bipyramid_volume, bn_ideal, bn_square, bn_trunc, maximal_wedge_angles, BipyramidReport};
use hypvol_core::gentetra::{
    classify_vertices, criticality_residual, determinant, gram_matrix, volume, AngleVector, CLASSIFICATION_TOL,
    DEFAULT_FD_STEP,
};
use hypvol_core::tiling::{
    density_with_tol, find_solid, spherical_catalog, weight_to_ratio, CheckKind, TilingReport, TilingSpec,
    VertexConfig, DEFAULT_SOLVER_TOL,
};
use hypvol_core::{Error, Result};
use num_rational::Ratio;

use crate::angle::parse_angle;
use crate::output::{format_float, Document, Format, Record, Value};
use crate::spec_file::read_spec;
use crate::tables;

#[derive(Debug, Parser)]
#[command(name = "hypvol", version, about = "Hyperbolic volumes of tetrahedra, bipyramids and tiling links")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Decimal places for numeric output.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u8).range(0..=17))]
    pub digits: u8,
    /// Solver tolerance for tilings; vertex classification tolerance for tetrahedra.
    #[arg(long, global = true, value_parser = parse_tol)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_tol(text: &str) -> std::result::Result<f64, String> {
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("`{text}` is not a positive tolerance")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Trunc,
    Ideal,
    Square,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Fig8,
    Fig11,
    Fig12a,
    Fig12b,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Volume and vertex types of a tetrahedron from its dihedral angles.
    Tetra {
        /// Six angles A,B,C,D,E,F; decimals or forms like pi/3, 2*pi/5.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        angles: Vec<String>,
    },
    /// Maximal-volume wedge with core angle A.
    Wedge {
        #[arg(long = "a", allow_hyphen_values = true)]
        a: String,
    },
    /// Bipyramid volumes.
    Bipyramid {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Vertical dihedral angle; only for `--family custom`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Equilateral realization and volume density of a tiling link.
    Tiling {
        /// Vertex class `p.q.r[.s]`, optionally `:weight`; repeat for several classes.
        #[arg(long = "config", required_unless_present = "spec", conflicts_with = "spec")]
        configs: Vec<String>,
        /// TOML or JSON spec file.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Platonic and Archimedean solids.
    Catalog {
        /// Show one solid with its link volume.
        #[arg(long)]
        name: Option<String>,
    },
    /// Regenerate a reference table.
    Tables {
        #[arg(long, value_enum)]
        figure: Figure,
    },
}

pub fn exit_code(error: &Error) -> i32 {
    match error.category() {
        hypvol_core::ErrorCategory::Parse => 2,
        hypvol_core::ErrorCategory::Domain => 3,
        hypvol_core::ErrorCategory::Numerical => 4,
    }
}

struct Settings {
    digits: usize,
    tol: Option<f64>,
}

impl Settings {
    fn solver_tol(&self) -> f64 {
        self.tol.unwrap_or(DEFAULT_SOLVER_TOL)
    }
}

pub fn execute(cli: &Cli) -> Result<Document> {
    let settings = Settings {
        digits: cli.digits as usize,
        tol: cli.tol,
    };
    match &cli.command {
        Command::Tetra { angles } => tetra(angles, &settings),
        Command::Wedge { a } => wedge(a, &settings),
        Command::Bipyramid { family, n, alpha } => bipyramid(*family, *n, alpha.as_deref()),
        Command::Tiling { configs, spec } => {
            let spec = match spec {
                Some(path) => read_spec(path)?,
                None => spec_from_flags(configs)?,
            };
            tiling(&spec, &settings)
        }
        Command::Catalog { name } => catalog(name.as_deref(), &settings),
        Command::Tables { figure } => table(*figure, &settings),
    }
}

const ANGLE_NAMES: [&str; 6] = ["A", "B", "C", "D", "E", "F"];

fn push_tetrahedron(record: &mut Record, delta: &AngleVector, tol: f64) -> Result<()> {
    for (name, value) in ANGLE_NAMES.iter().zip(delta.to_array()) {
        record.push(*name, value);
    }
    let det = determinant(&gram_matrix(delta));
    // A positive determinant means a spherical Gram matrix, outside the
    // formula's domain; zero is left to the formula's degeneracy check.
    let hyperbolic = det <= 0.0;
    record.push("det_gram", det);
    record.push("hyperbolic", hyperbolic);
    record.push("volume", if hyperbolic { Some(volume(delta)?) } else { None });
    for (i, vertex) in classify_vertices(delta, tol).iter().enumerate() {
        record.push(format!("v{}_kind", i + 1), vertex.kind.as_str());
        record.push(format!("v{}_angle_sum", i + 1), vertex.angle_sum);
    }
    Ok(())
}

fn tetra(literals: &[String], settings: &Settings) -> Result<Document> {
    if literals.len() != 6 {
        return Err(Error::Parse {
            position: 0,
            message: format!("--angles needs 6 values, got {}", literals.len()),
        });
    }
    let mut angles = [0.0; 6];
    for (slot, text) in angles.iter_mut().zip(literals) {
        *slot = parse_angle(text)?;
    }
    let delta = AngleVector::from_array(angles)?;
    let mut record = Record::new();
    push_tetrahedron(&mut record, &delta, settings.tol.unwrap_or(CLASSIFICATION_TOL))?;
    Ok(Document::new("tetra", vec![record]))
}

fn wedge(literal: &str, settings: &Settings) -> Result<Document> {
    let a = parse_angle(literal)?;
    let delta = maximal_wedge_angles(a)?;
    let mut record = Record::new();
    push_tetrahedron(&mut record, &delta, settings.tol.unwrap_or(CLASSIFICATION_TOL))?;
    let residual = if a < std::f64::consts::PI {
        Some(criticality_residual(a, DEFAULT_FD_STEP)?)
    } else {
        None
    };
    record.push("criticality_residual", residual);
    Ok(Document::new("wedge", vec![record]))
}

fn bipyramid(family: Family, n: u32, alpha: Option<&str>) -> Result<Document> {
    let report: BipyramidReport = match (family, alpha) {
        (Family::Custom, Some(text)) => bipyramid_volume(n, parse_angle(text)?)?,
        (Family::Custom, None) => {
            return Err(Error::Parse {
                position: 0,
                message: "--family custom needs --alpha".into(),
            })
        }
        (_, Some(_)) => {
            return Err(Error::Parse {
                position: 0,
                message: "--alpha is only accepted with --family custom".into(),
            })
        }
        (Family::Trunc, None) => bn_trunc(n)?,
        (Family::Ideal, None) => bn_ideal(n)?,
        (Family::Square, None) => bn_square(n)?,
    };
    let family = family.to_possible_value().expect("no skipped variants");
    let record = Record::new()
        .with("family", family.get_name())
        .with("n", report.n)
        .with("alpha", report.alpha)
        .with("apex_kind", report.apex.kind.as_str())
        .with("apex_angle_sum", report.apex.angle_sum)
        .with("wedge_volume", report.wedge_volume)
        .with("volume", report.total_volume);
    Ok(Document::new("bipyramid", vec![record]))
}

/// Parses `p.q.r[.s][:weight]`, where the weight is a decimal or `a/b`.
fn parse_class(text: &str) -> Result<(VertexConfig, Ratio<i64>)> {
    let (config_text, weight_text) = match text.split_once(':') {
        Some((c, w)) => (c, Some(w)),
        None => (text, None),
    };
    let config: VertexConfig = config_text.parse()?;
    let weight = match weight_text.map(str::trim) {
        None => Ratio::from_integer(1),
        Some(w) if w.contains('/') => w.parse::<Ratio<i64>>().map_err(|_| Error::Parse {
            position: config_text.len() + 1,
            message: format!("`{w}` is not a fraction"),
        })?,
        Some(w) => {
            let value: f64 = w.parse().map_err(|_| Error::Parse {
                position: config_text.len() + 1,
                message: format!("`{w}` is not a weight"),
            })?;
            weight_to_ratio(value)?
        }
    };
    Ok((config, weight))
}

fn spec_from_flags(configs: &[String]) -> Result<TilingSpec> {
    let classes = configs.iter().map(|c| parse_class(c)).collect::<Result<Vec<_>>>()?;
    if let [(config, _)] = classes.as_slice() {
        return Ok(TilingSpec::single(config.clone()));
    }
    let name = classes.iter().map(|(c, _)| c.to_string()).collect::<Vec<_>>().join(" + ");
    TilingSpec::new(name, classes)
}

fn ratio_value(r: Ratio<i64>) -> Value {
    if r.is_integer() {
        Value::Int(r.to_integer())
    } else {
        Value::Text(r.to_string())
    }
}

fn tiling_record(spec: &TilingSpec, report: &TilingReport) -> Record {
    let classes: Vec<String> = spec
        .classes()
        .iter()
        .map(|c| format!("{}:{}", c.config, c.weight))
        .collect();
    let mut record = Record::new()
        .with("name", report.name.clone())
        .with("classes", classes.join(" "))
        .with("geometry", report.geometry.as_str())
        .with("s", report.assignment.s)
        .with("edge_length", report.assignment.edge_length);
    for (n, alpha) in &report.assignment.angles {
        record.push(format!("angle_{n}"), *alpha);
    }
    for (n, vol) in &report.per_face_volumes {
        record.push(format!("bipyramid_volume_{n}"), *vol);
    }
    record.push("density", report.density);
    record.push("euler_per_crossing", report.euler_per_crossing.to_string());
    record.push("minimal_genus", report.minimal_genus.map_or(Value::Null, ratio_value));
    record.push("checks_passed", report.checks.all_passed());
    let applicable = |kind: CheckKind| report.checks.outcomes.iter().any(|o| o.check == kind);
    for kind in [CheckKind::VerticalSum, CheckKind::EquatorialSum, CheckKind::BigonRelation] {
        let residual = applicable(kind).then(|| report.checks.max_residual(kind));
        record.push(format!("{}_residual", kind.as_str()), residual);
    }
    record.push("apex_kind_passed", report.checks.passed(CheckKind::ApexKind));
    record.push("total_volume", report.total_volume);
    record.push("vol_over_2", report.vol_over_2);
    record
}

fn tiling(spec: &TilingSpec, settings: &Settings) -> Result<Document> {
    let report = density_with_tol(spec, settings.solver_tol())?;
    Ok(Document::new("tiling", vec![tiling_record(spec, &report)]))
}

fn faces_text(faces: &[(u32, u64)]) -> String {
    faces.iter().map(|(n, c)| format!("{n}:{c}")).collect::<Vec<_>>().join(" ")
}

fn angles_text(angles: &[f64], digits: usize) -> String {
    angles
        .iter()
        .map(|a| format!("({})", format_float(*a, digits)))
        .collect::<Vec<_>>()
        .join(".")
}

fn catalog(name: Option<&str>, settings: &Settings) -> Result<Document> {
    let entries: Vec<_> = match name {
        Some(name) => vec![find_solid(name).ok_or_else(|| Error::Domain(format!("unknown solid `{name}`")))?],
        None => spherical_catalog().iter().collect(),
    };
    let mut records = Vec::new();
    for entry in entries {
        let faces = entry.face_multiset();
        let corners: u64 = faces.iter().map(|(&n, &c)| n as u64 * c).sum();
        let mut record = Record::new()
            .with("name", entry.name)
            .with("config", entry.vertex_config().to_string())
            .with("faces", faces_text(entry.faces))
            .with("vertices", (corners / entry.config.len() as u64) as i64)
            .with("edges", (corners / 2) as i64)
            .with("face_count", faces.values().sum::<u64>() as i64)
            .with("euler_characteristic", ratio_value(entry.euler_characteristic()));
        if name.is_some() {
            let report = density_with_tol(&entry.spec()?, settings.solver_tol())?;
            let angles: Vec<f64> = entry.config.iter().map(|n| report.assignment.angles[n]).collect();
            record.push("angles", angles_text(&angles, settings.digits));
            record.push("vol_l", report.total_volume);
            record.push("vol_over_2", report.vol_over_2);
        }
        records.push(record);
    }
    Ok(Document::new("catalog", records))
}

fn table(figure: Figure, settings: &Settings) -> Result<Document> {
    let tol = settings.solver_tol();
    let records = match figure {
        Figure::Fig8 => tables::truncated_bipyramid_rows()?
            .into_iter()
            .map(|row| Record::new().with("n", row.n).with("volume", row.volume))
            .collect(),
        Figure::Fig11 => tables::solid_rows(tol)?
            .into_iter()
            .map(|row| {
                let status = tables::Status::judge(row.link.vol_over_2, row.published, tables::AGREEMENT_TOL);
                Record::new()
                    .with("name", row.link.name.clone())
                    .with("config", row.link.config.to_string())
                    .with("angles", angles_text(&row.angles, settings.digits))
                    .with("vol_over_2", row.link.vol_over_2)
                    .with("published_value", row.published)
                    .with("status", status.as_str())
            })
            .collect(),
        Figure::Fig12a | Figure::Fig12b => {
            let hyperbolic = figure == Figure::Fig12b;
            let rows = if hyperbolic {
                tables::hyperbolic_rows(tol)?
            } else {
                tables::euclidean_rows(tol)?
            };
            rows.into_iter()
                .map(|row| {
                    let mut record = Record::new()
                        .with("config", row.config)
                        .with("geometry", row.geometry.as_str())
                        .with("density", row.density);
                    if hyperbolic {
                        record.push("minimal_genus", row.minimal_genus.map_or(Value::Null, ratio_value));
                    }
                    record.with("published_value", row.published).with("status", row.status.as_str())
                })
                .collect()
        }
    };
    let name = figure.to_possible_value().expect("no skipped variants");
    Ok(Document::new(format!("tables {}", name.get_name()), records))
}
