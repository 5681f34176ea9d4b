//! Command-line front end: flags and JSON configuration, orchestration of the
//! library and CSV/JSON emission.

mod config;
mod output;

pub use config::{CommandKind, Format, GridSpec, OutputConfig, RunConfig};
pub use output::{format_number, Cell, Manifest, Table};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::diagram::{self, reference, FractalEos};
use crate::ensemble::{self, SpectrumSpec};
use crate::error::{Error, Result};
use crate::partition;
use crate::scatter::{self, PotentialSpec};

#[derive(Debug, Parser)]
#[command(name = "zenoline", version, about = "Zeno-line phase diagrams, fractal Bose-Einstein isotherms and restricted partitions")]
pub struct Cli {
    /// JSON run configuration; flags override its keys.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write a gnuplot script next to the CSV output.
    #[arg(long, global = true)]
    pub plot: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Args, Default)]
pub struct PotentialArgs {
    /// lj, mie, morse or buckingham.
    #[arg(long)]
    pub potential: Option<String>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Repulsive exponent of the Mie form.
    #[arg(long = "rep-exp")]
    pub rep_exp: Option<f64>,
    /// Attractive exponent of the Mie form.
    #[arg(long = "att-exp")]
    pub att_exp: Option<f64>,
    #[arg(long)]
    pub depth: Option<f64>,
    /// Morse range parameter a.
    #[arg(long = "morse-a")]
    pub morse_a: Option<f64>,
    #[arg(long = "r-e")]
    pub r_e: Option<f64>,
    #[arg(long = "buck-a")]
    pub buck_a: Option<f64>,
    #[arg(long = "buck-b")]
    pub buck_b: Option<f64>,
    #[arg(long = "buck-c")]
    pub buck_c: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zeno-condition root r*, α and E at each impact parameter B.
    Zeno {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long = "B-grid")]
        b_grid: Option<GridSpec>,
    },
    /// Z = 1 − E_max/E_min along the reduced density grid ρ/ρ_B.
    Compressibility {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long = "B")]
        b: Option<f64>,
        #[arg(long = "x-grid")]
        x_grid: Option<GridSpec>,
    },
    /// Critical point of the scattering picture.
    Critical {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long = "B")]
        b: Option<f64>,
    },
    /// T_r = 1 isotherm, ideal or on the solved fractal equation of state.
    Isotherm {
        #[arg(long = "P-grid")]
        p_grid: Option<GridSpec>,
        #[arg(long)]
        gamma0: Option<f64>,
        #[arg(long)]
        imperfect: bool,
        /// Equation-of-state volumes as lo:hi:points, log-spaced.
        #[arg(long = "V-grid")]
        v_grid: Option<GridSpec>,
    },
    /// γ(μ) jamming extension with the breakpoint stitch and the linear variant.
    Jamming {
        #[arg(long = "mu-grid", allow_hyphen_values = true)]
        mu_grid: Option<GridSpec>,
        #[arg(long)]
        gamma0: Option<f64>,
        #[arg(long = "V-grid")]
        v_grid: Option<GridSpec>,
    },
    /// Restricted partitions p_k(n).
    Partition {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        /// Emit the whole row p_1(n), ..., p_n(n).
        #[arg(long)]
        table: bool,
    },
    /// Condensate threshold k₀ against its asymptotics.
    Threshold {
        #[arg(long, value_delimiter = ',')]
        n: Vec<u64>,
    },
    /// Gibbs concentration by exact enumeration, or the Boltzmann limit.
    Ensemble {
        #[arg(long, value_delimiter = ',')]
        levels: Vec<f64>,
        #[arg(long = "N", value_delimiter = ',')]
        particles: Vec<u64>,
        /// Energy per particle.
        #[arg(long = "E")]
        energy: Option<f64>,
        #[arg(long)]
        boltzmann: bool,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        kappa: Vec<f64>,
    },
    /// Bundled reference tables.
    Reference {
        /// rotation-angles, substances or landmarks.
        #[arg(long)]
        table: Option<String>,
    },
}

fn family_default(name: &str) -> Result<PotentialSpec> {
    Ok(match name.to_ascii_lowercase().as_str() {
        "lj" | "lennard_jones" | "lennard-jones" => PotentialSpec::reduced_lj(),
        "mie" | "generalized_lj" => PotentialSpec::GeneralizedLj {
            epsilon: 1.0,
            sigma: 1.0,
            n: 12.0,
            m: 6.0,
        },
        "morse" => PotentialSpec::Morse {
            depth: 1.0,
            a: 6.0,
            r_e: 2f64.powf(1.0 / 6.0),
        },
        "buckingham" => PotentialSpec::Buckingham {
            a: 1e5,
            b: 11.0,
            c: 2.0,
        },
        other => return Err(Error::config("potential", format!("unknown family '{other}'"))),
    })
}

impl PotentialArgs {
    fn apply(&self, base: PotentialSpec) -> Result<PotentialSpec> {
        let mut p = match &self.potential {
            Some(name) => family_default(name)?,
            None => base,
        };
        let set = |slot: &mut f64, v: Option<f64>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        match &mut p {
            PotentialSpec::LennardJones { epsilon, sigma } => {
                set(epsilon, self.epsilon);
                set(sigma, self.sigma);
            }
            PotentialSpec::GeneralizedLj { epsilon, sigma, n, m } => {
                set(epsilon, self.epsilon);
                set(sigma, self.sigma);
                set(n, self.rep_exp);
                set(m, self.att_exp);
            }
            PotentialSpec::Morse { depth, a, r_e } => {
                set(depth, self.depth);
                set(a, self.morse_a);
                set(r_e, self.r_e);
            }
            PotentialSpec::Buckingham { a, b, c } => {
                set(a, self.buck_a);
                set(b, self.buck_b);
                set(c, self.buck_c);
            }
        }
        Ok(p)
    }
}

/// Resolves the configuration file and the flags into one validated config.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let mut c = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(o) = &cli.out {
        c.output.path = Some(o.clone());
    }
    if let Some(f) = cli.format {
        c.output.format = f;
    }
    if cli.plot {
        c.output.plot = true;
    }
    fn over<T: Clone>(slot: &mut T, v: &Option<T>) {
        if let Some(v) = v {
            *slot = v.clone();
        }
    }
    match &cli.command {
        None => {}
        Some(Command::Zeno { potential, b_grid }) => {
            c.command = Some(CommandKind::Zeno);
            c.potential = potential.apply(c.potential)?;
            over(&mut c.b_grid, b_grid);
        }
        Some(Command::Compressibility { potential, b, x_grid }) => {
            c.command = Some(CommandKind::Compressibility);
            c.potential = potential.apply(c.potential)?;
            over(&mut c.b, b);
            over(&mut c.x_grid, x_grid);
        }
        Some(Command::Critical { potential, b }) => {
            c.command = Some(CommandKind::Critical);
            c.potential = potential.apply(c.potential)?;
            over(&mut c.b, b);
        }
        Some(Command::Isotherm {
            p_grid,
            gamma0,
            imperfect,
            v_grid,
        }) => {
            c.command = Some(CommandKind::Isotherm);
            over(&mut c.p_grid, p_grid);
            over(&mut c.gamma0, gamma0);
            over(&mut c.v_grid, v_grid);
            c.imperfect |= *imperfect;
        }
        Some(Command::Jamming { mu_grid, gamma0, v_grid }) => {
            c.command = Some(CommandKind::Jamming);
            over(&mut c.mu_grid, mu_grid);
            over(&mut c.gamma0, gamma0);
            over(&mut c.v_grid, v_grid);
        }
        Some(Command::Partition { n, k, table }) => {
            c.command = Some(CommandKind::Partition);
            if let Some(n) = n {
                c.n = vec![*n];
            }
            if k.is_some() {
                c.k = *k;
            }
            c.table |= *table;
        }
        Some(Command::Threshold { n }) => {
            c.command = Some(CommandKind::Threshold);
            if !n.is_empty() {
                c.n = n.clone();
            }
        }
        Some(Command::Ensemble {
            levels,
            particles,
            energy,
            boltzmann,
            gamma,
            kappa,
        }) => {
            c.command = Some(CommandKind::Ensemble);
            if !levels.is_empty() {
                c.levels = levels.clone();
            }
            if !particles.is_empty() {
                c.particles = particles.clone();
            }
            over(&mut c.energy, energy);
            c.boltzmann |= *boltzmann;
            over(&mut c.gamma, gamma);
            if !kappa.is_empty() {
                c.kappa = kappa.clone();
            }
        }
        Some(Command::Reference { table }) => {
            c.command = Some(CommandKind::Reference);
            over(&mut c.reference_table, table);
        }
    }
    c.validate()?;
    Ok(c)
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub table: Table,
    pub manifest: Manifest,
}

fn anchors(kind: CommandKind) -> Vec<String> {
    let a: &[&str] = match kind {
        CommandKind::Zeno => &["Zeno condition on the effective scattering energy", "α from the first and second derivative conditions"],
        CommandKind::Compressibility => &["Z as the ratio of the stationary values of the effective energy"],
        CommandKind::Critical => &["critical point where dZ/d(ρ/ρ_B) = −1", "temperature ratio from the well depth"],
        CommandKind::Isotherm => &["T_r = 1 isotherm from the polylogarithm pair", "volume factor from the fractal equation of state"],
        CommandKind::Jamming => &["first-order equation for γ(μ)", "straight segment from the breakpoint to the Zeno line"],
        CommandKind::Partition => &["restricted partitions p_k(n) by recurrence"],
        CommandKind::Threshold => &["argmax of p_k(n) against the two-term asymptotics"],
        CommandKind::Ensemble => &["exact enumeration of occupation numbers", "Gibbs band B√(L₀ ln L₀)ψ(L₀)", "Boltzmann limit of the Bose integral"],
        CommandKind::Reference => &["bundled reference tables"],
    };
    a.iter().map(|s| s.to_string()).collect()
}

fn solved_eos(c: &RunConfig) -> Result<FractalEos> {
    diagram::solve_phi(c.gamma0, &c.v_points(), &c.zeno)
}

fn li(v: f64) -> Cell {
    Cell::Num(v)
}

/// Runs one validated configuration and returns its table and manifest.
pub fn run(c: &RunConfig) -> Result<RunOutput> {
    c.validate()?;
    let kind = c.command.expect("validated");
    let mut table = match kind {
        CommandKind::Zeno => {
            let curve = scatter::trace_zeno_analog(&c.potential, &c.b_grid.points())?;
            Table::from_curve(&curve)
        }
        CommandKind::Compressibility => {
            let curve = scatter::compressibility_curve_reduced(&c.potential, c.b, &c.x_grid.points())?;
            Table::from_curve(&curve)
        }
        CommandKind::Critical => {
            let s = scatter::critical_summary_at(&c.potential, c.b)?;
            let mut t = Table::new(
                "critical",
                &["B", "Z_cr", "rho_cr_over_rho_B", "T_cr_over_T_B", "alpha_star", "T_ref_table", "T_ref_quoted"],
            );
            t.push(vec![
                li(s.b),
                li(s.z_cr),
                li(s.rho_cr_over_rho_b),
                li(s.t_cr_over_t_b),
                li(s.alpha_star),
                li(s.t_reference[0]),
                li(s.t_reference[1]),
            ]);
            for (i, p) in s.provenance.iter().enumerate() {
                t.meta(&format!("construction_{i}"), p);
            }
            t
        }
        CommandKind::Isotherm => {
            let p = c.p_grid.points();
            let (pts, model) = if c.imperfect {
                (diagram::imperfect_isotherm(&p, &solved_eos(c)?)?, "imperfect")
            } else {
                (diagram::ideal_isotherm(&p, c.gamma0)?, "ideal")
            };
            let mut t = Table::new(
                "isotherm",
                &["P_r", "Z", "a", "T_r", "V", "residual_volume", "residual_pressure"],
            );
            for q in &pts {
                t.push(vec![
                    li(q.p_r),
                    li(q.z),
                    li(q.a),
                    li(q.t_r),
                    li(q.volume()),
                    li(q.residual_volume),
                    li(q.residual_pressure),
                ]);
            }
            t.meta("model", model);
            t.meta("gamma0", c.gamma0);
            t
        }
        CommandKind::Jamming => {
            let eos = solved_eos(c)?;
            let j = diagram::jamming_extension(&c.mu_grid.points(), &eos, &diagram::ZenoLine::critical_reduced_reference())?;
            let mut t = Table::new("jamming", &["curve", "x", "P", "Z", "gamma"]);
            let col = |curve: &crate::curve::PhaseCurve, name: &str| curve.column(name);
            let (g, p, z) = (col(&j.traced, "gamma"), col(&j.traced, "P"), col(&j.traced, "Z"));
            if let (Some(g), Some(p), Some(z)) = (g, p, z) {
                for (i, x) in j.traced.xs().into_iter().enumerate() {
                    t.push(vec!["traced".into(), li(x), li(p[i]), li(z[i]), li(g[i])]);
                }
            }
            for pt in &j.stitched.points {
                t.push(vec!["stitched".into(), li(pt.x), li(pt.x), li(pt.values[0]), Cell::Empty]);
            }
            for pt in &j.linear_variant.points {
                t.push(vec!["linear".into(), li(pt.x), li(pt.values[1]), li(pt.values[2]), li(pt.values[0])]);
            }
            t.meta("breakpoint_P", format_number(j.breakpoint.0));
            t.meta("breakpoint_Z", format_number(j.breakpoint.1));
            t.meta("zeno_point_P", format_number(j.zeno_point.0));
            t.meta("traced_full_jamming", j.traced_full_jamming);
            t.meta("linear_full_jamming", j.linear_full_jamming);
            for f in &j.traced.failures {
                t.meta(&format!("failure_mu_{}", format_number(f.x)), &f.reason);
            }
            t
        }
        CommandKind::Partition => {
            let n = c.n[0] as usize;
            let k_max = n.max(1);
            let tab = partition::build_partition_table(k_max, k_max)?;
            let total = tab.total(n).expect("complete row");
            if c.table {
                let mut t = Table::new("partition_row", &["k", "p_k"]);
                for k in 1..=n {
                    t.push(vec![Cell::from(k), Cell::Int(tab.get(n, k).unwrap().to_string())]);
                }
                t.meta("n", n);
                t.meta("p_n", &total);
                t
            } else {
                let mut t = Table::new("partition", &["n", "k", "p_k", "log2_p_k", "p_n"]);
                match c.k {
                    Some(k) => {
                        let k = k as usize;
                        let v = tab.get(n, k).unwrap_or_default();
                        let h = partition::hartley_entropy(n, k, &tab).unwrap_or(f64::NEG_INFINITY);
                        t.push(vec![Cell::from(n), Cell::from(k), Cell::Int(v.to_string()), li(h), Cell::Int(total.to_string())]);
                    }
                    None => t.push(vec![Cell::from(n), Cell::Empty, Cell::Empty, Cell::Empty, Cell::Int(total.to_string())]),
                }
                t
            }
        }
        CommandKind::Threshold => {
            let ns: Vec<usize> = c.n.iter().map(|&n| n as usize).collect();
            let k_max = *ns.iter().max().unwrap();
            let tab = partition::partition_rows(&ns, k_max.max(1))?;
            let mut t = Table::new(
                "threshold",
                &["n", "k0_exact", "k0_leading", "k0_two_term", "k0_two_term_split", "ratio_two_term", "accuracy_scale"],
            );
            for &n in &ns {
                let th = partition::condensate_threshold(n, &tab)?;
                t.push(vec![
                    Cell::from(n),
                    Cell::from(th.k0_exact),
                    li(th.k0_leading),
                    li(th.k0_two_term),
                    li(th.k0_two_term_split),
                    li(th.k0_two_term / th.k0_exact as f64),
                    li(th.accuracy_scale),
                ]);
            }
            t
        }
        CommandKind::Ensemble => {
            if c.boltzmann {
                let rows = ensemble::boltzmann_limit_check(c.gamma, &c.kappa)?;
                let mut t = Table::new("boltzmann", &["kappa", "ratio", "deficit", "predicted_deficit"]);
                for r in rows {
                    t.push(vec![li(r.kappa), li(r.ratio), li(r.deficit), li(r.predicted_deficit)]);
                }
                t.meta("gamma", c.gamma);
                t
            } else {
                let spec = SpectrumSpec::new(c.levels.clone())?;
                let r = ensemble::concentration_report(&spec, &c.particles, c.energy, ensemble::default_psi)?;
                let mut t = Table::new("concentration", &["N", "states", "b", "L0", "width", "outside_fraction", "conserved"]);
                for row in &r.rows {
                    t.push(vec![
                        Cell::from(row.n),
                        Cell::from(row.states),
                        li(row.b),
                        li(row.l0),
                        li(row.width),
                        li(row.outside_fraction),
                        Cell::from(row.conserved),
                    ]);
                }
                t.meta("E", c.energy);
                t.meta("non_increasing", r.non_increasing);
                t.meta("label", &r.label);
                t
            }
        }
        CommandKind::Reference => match c.reference_table.as_str() {
            "rotation-angles" => {
                let mut t = Table::new("rotation_angles", &["V", "alpha"]);
                for (v, a) in [(">=0.3", "0.049"), ("0.25", "0.052"), ("0.20", "0.058"), ("0.17", "0.066")] {
                    t.push(vec![v.into(), a.into()]);
                }
                t.meta("source", reference::ROTATION_SOURCE);
                t
            }
            "substances" => {
                let mut t = Table::new("substances", &["substance", "formula", "epsilon_K", "T_cr_over_4", "estimate"]);
                for s in &reference::SUBSTANCES {
                    t.push(vec![s.name.into(), s.formula.into(), li(s.epsilon_k), li(s.t_cr_quarter), li(s.estimate)]);
                }
                t.meta("source", reference::SUBSTANCE_SOURCE);
                t
            }
            "landmarks" => {
                let mut t = Table::new("landmarks", &["key", "value", "source"]);
                for l in &reference::LANDMARKS {
                    t.push(vec![l.key.into(), li(l.value), l.source.into()]);
                }
                t
            }
            other => {
                return Err(Error::config(
                    "reference_table",
                    format!("unknown table '{other}'; expected rotation-angles, substances or landmarks"),
                ))
            }
        },
    };
    if let Some(name) = match kind {
        CommandKind::Zeno | CommandKind::Compressibility | CommandKind::Critical => Some(c.potential.family()),
        _ => None,
    } {
        table.meta("potential", name);
    }
    let hash = hex::encode(Sha256::digest(c.canonical_json().as_bytes()));
    let manifest = Manifest {
        program: "zenoline",
        version: env!("CARGO_PKG_VERSION"),
        command: kind.name().to_string(),
        config_sha256: hash,
        anchors: anchors(kind),
    };
    Ok(RunOutput { table, manifest })
}

fn render(out: &RunOutput, format: Format) -> String {
    match format {
        Format::Csv => out.table.to_csv(),
        Format::Json => {
            let v = json!({ "manifest": out.manifest, "table": out.table.to_json_value() });
            let mut s = serde_json::to_string_pretty(&v).expect("json");
            s.push('\n');
            s
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::config("output.path", format!("{}: {e}", path.display())))
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

/// Writes the rendered output; CSV files get a `.manifest` sidecar and,
/// on request, a `.gp` gnuplot script.
pub fn emit(out: &RunOutput, cfg: &OutputConfig) -> Result<()> {
    let text = render(out, cfg.format);
    match &cfg.path {
        Some(path) => {
            write_file(path, &text)?;
            if cfg.format == Format::Csv {
                write_file(&sidecar(path, ".manifest"), &(out.manifest.line() + "\n"))?;
                if cfg.plot {
                    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
                    write_file(&sidecar(path, ".gp"), &out.table.gnuplot_script(&name))?;
                }
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            if cfg.format == Format::Csv {
                eprintln!("manifest: {}", out.manifest.line());
            }
        }
    }
    Ok(())
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("ZENOLINE_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::config("ZENOLINE_THREADS", format!("'{v}' is not a positive integer")))?;
        // a second initialization in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Parses arguments, runs and writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = configure_threads()
        .and_then(|_| resolve_config(&cli))
        .and_then(|c| run(&c).and_then(|out| emit(&out, &c.output)));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig> {
        let mut v = vec!["zenoline"];
        v.extend_from_slice(args);
        resolve_config(&Cli::try_parse_from(v).unwrap())
    }

    #[test]
    fn flags_resolve() {
        let c = config(&["zeno", "--potential", "lj", "--B-grid", "5:100:5"]).unwrap();
        assert_eq!(c.command, Some(CommandKind::Zeno));
        assert_eq!(c.b_grid.points().len(), 20);
        let c = config(&["ensemble", "--boltzmann", "--kappa", "-5,-10"]).unwrap();
        assert_eq!(c.kappa, vec![-5.0, -10.0]);
        let c = config(&["jamming", "--mu-grid", "0:-1:-0.25"]).unwrap();
        assert_eq!(c.mu_grid.points().len(), 5);
        let c = config(&["compressibility", "--potential", "morse", "--depth", "2"]).unwrap();
        assert!(matches!(c.potential, PotentialSpec::Morse { depth, .. } if depth == 2.0));
        assert!(matches!(config(&["zeno", "--potential", "yukawa"]), Err(Error::Config { .. })));
        assert!(matches!(config(&[]), Err(Error::Config { .. })));
    }

    #[test]
    fn partition_row_table() {
        let out = run(&config(&["partition", "--n", "100", "--table"]).unwrap()).unwrap();
        assert_eq!(out.table.rows.len(), 100);
        assert_eq!(out.table.meta["p_n"], "190569292");
        let csv = out.table.to_csv();
        let sum: u64 = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap()).sum();
        assert_eq!(sum, 190_569_292);
    }

    #[test]
    fn reference_table_verbatim() {
        let out = run(&config(&["reference", "--table", "rotation-angles"]).unwrap()).unwrap();
        assert_eq!(out.table.to_csv(), "V,alpha\n>=0.3,0.049\n0.25,0.052\n0.20,0.058\n0.17,0.066\n");
        assert!(run(&config(&["reference", "--table", "nope"]).unwrap()).is_err());
    }

    #[test]
    fn deterministic_manifest() {
        let c = config(&["threshold", "--n", "50,80"]).unwrap();
        let (a, b) = (run(&c).unwrap(), run(&c).unwrap());
        assert_eq!(a.table.to_csv(), b.table.to_csv());
        assert_eq!(a.manifest.config_sha256, b.manifest.config_sha256);
        let other = run(&config(&["threshold", "--n", "50,81"]).unwrap()).unwrap();
        assert_ne!(a.manifest.config_sha256, other.manifest.config_sha256);
    }
}
