//! Command-line front end: file-driven checks, Hopf trace evaluation,
//! degree verification, certified builders, and batch manifests.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{ArgAction, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::chain_map::{verify_hopf, ChainMap};
use crate::collapse::{cone_collapse_field, derive_sphere_witness, gvf_join, sphere_witness_bd};
use crate::complex::{cone, fresh_vertex, is_pseudomanifold, ComplexHandle};
use crate::error::{Error, Result};
use crate::io::{
    file_digest, load_action, load_complex, load_dvf, load_map, write_json, ActionFile,
    ComplexFile, DvfFile,
};
use crate::report::Report;
use crate::sphere::SphereWitness;
use crate::subdivision::SubdivisionTower;

#[derive(Debug, Parser)]
#[command(
    name = "hopftrace",
    version,
    about = "Exact integer checks for discrete Morse theory: gradient fields, the Hopf trace \
             identity, combinatorial spheres, and equivariant map degrees"
)]
pub struct Cli {
    /// Seed for randomized batch jobs
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Deviation budget for greedy collapses (witness derivation, bd builds)
    #[arg(long, global = true, default_value_t = 0)]
    pub backtrack_depth: usize,

    /// Directory that `build` writes into
    #[arg(long, global = true, default_value = ".")]
    pub output_dir: PathBuf,

    /// Emit the report as JSON (pass `--json false` for plain text)
    #[arg(long, global = true, action = ArgAction::Set, default_value_t = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify a complex (pseudomanifold) and optionally a field on it
    /// (matching, acyclicity, critical census)
    Check {
        complex: PathBuf,
        #[arg(long)]
        dvf: Option<PathBuf>,
    },
    /// Evaluate both sides of the combinatorial Hopf trace identity
    Hopf {
        complex: PathBuf,
        dvf: PathBuf,
        /// A simplicial self-map file, or "identity" / "zero"
        #[arg(long, default_value = "identity")]
        map: String,
    },
    /// Combinatorial degree of a simplicial map Bd^k(S) -> S, cross-checked
    /// against the signed-preimage oracle; with actions, also the
    /// equivariance and deg ≡ 1 (mod p) verdicts
    Degree {
        /// Simplicial map file; vertex ids refer to the canonical labeling
        /// of Bd^k(target) as emitted by `build bd`
        #[arg(long)]
        map: PathBuf,
        /// The target sphere S
        #[arg(long)]
        target: PathBuf,
        /// Number of barycentric subdivisions separating source from target
        #[arg(short, default_value_t = 0)]
        k: usize,
        /// Sphere-witness field on Bd^k(target); derived when omitted
        #[arg(long)]
        dvf: Option<PathBuf>,
        /// Z_p action on the target
        #[arg(long)]
        target_action: Option<PathBuf>,
        /// Z_p action on Bd^k(target); induced from the target action when
        /// omitted
        #[arg(long)]
        source_action: Option<PathBuf>,
    },
    /// Build certified complexes, witnesses, and actions
    Build {
        #[command(subcommand)]
        target: BuildTarget,
    },
    /// Run a JSON manifest of verification jobs
    Batch { manifest: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum BuildTarget {
    /// The q-skeleton of the simplex on n+1 vertices; for q = n-1 also the
    /// sphere witness field
    Skeleton { n: i64, q: i64 },
    /// Cone over a complex, with the canonical full-collapse field
    Cone { complex: PathBuf },
    /// Barycentric subdivision of a sphere, with a transferred witness
    Bd {
        complex: PathBuf,
        #[arg(long)]
        dvf: Option<PathBuf>,
    },
    /// Join of two spheres with the five-step gradient field
    Join {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        dvf_left: Option<PathBuf>,
        #[arg(long)]
        dvf_right: Option<PathBuf>,
        #[arg(long)]
        action_left: Option<PathBuf>,
        #[arg(long)]
        action_right: Option<PathBuf>,
    },
    /// The free Z_p circle C_{m·p} with its witness and rotation action
    ZpCircle { p: u64, m: u64 },
}

/// Runs a command and returns its report; never panics on bad inputs.
pub fn run(cli: &Cli) -> Report {
    let mut inputs = BTreeMap::new();
    let outcome = dispatch(cli, &mut inputs);
    match outcome {
        Ok(report) => report,
        Err(err) => Report::error(command_name(&cli.command), inputs, &err),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Check { .. } => "check",
        Command::Hopf { .. } => "hopf",
        Command::Degree { .. } => "degree",
        Command::Build { .. } => "build",
        Command::Batch { .. } => "batch",
    }
}

fn digest_into(inputs: &mut BTreeMap<String, String>, path: &Path) -> Result<()> {
    inputs.insert(path.display().to_string(), file_digest(path)?);
    Ok(())
}

fn dispatch(cli: &Cli, inputs: &mut BTreeMap<String, String>) -> Result<Report> {
    match &cli.command {
        Command::Check { complex, dvf } => cmd_check(inputs, complex, dvf.as_deref()),
        Command::Hopf { complex, dvf, map } => cmd_hopf(inputs, complex, dvf, map),
        Command::Degree {
            map,
            target,
            k,
            dvf,
            target_action,
            source_action,
        } => cmd_degree(
            cli,
            inputs,
            map,
            target,
            *k,
            dvf.as_deref(),
            target_action.as_deref(),
            source_action.as_deref(),
        ),
        Command::Build { target } => cmd_build(cli, inputs, target),
        Command::Batch { manifest } => cmd_batch(cli, inputs, manifest),
    }
}

fn simplices_json(simplices: &[crate::simplex::Simplex]) -> Value {
    Value::Array(
        simplices
            .iter()
            .map(|s| Value::Array(s.vertices().iter().map(|v| json!(v.0)).collect()))
            .collect(),
    )
}

fn cmd_check(
    inputs: &mut BTreeMap<String, String>,
    complex_path: &Path,
    dvf_path: Option<&Path>,
) -> Result<Report> {
    digest_into(inputs, complex_path)?;
    let k = load_complex(complex_path)?;
    let mut result = json!({
        "dimension": k.dim(),
        "simplex_counts": k.counts(),
        "euler_characteristic": k.euler_characteristic(),
    });
    let mut failed = false;
    match is_pseudomanifold(&k) {
        Ok(()) => {
            result["pseudomanifold"] = json!(true);
        }
        Err(witness) => {
            failed = true;
            result["pseudomanifold"] = json!(false);
            result["pseudomanifold_witness"] = json!(format!("{witness:?}"));
        }
    }
    if let Some(path) = dvf_path {
        digest_into(inputs, path)?;
        match load_dvf(path, k.clone()) {
            Err(err) => {
                failed = true;
                result["dvf_valid"] = json!(false);
                result["dvf_witness"] = json!(err.to_string());
            }
            Ok(field) => {
                result["dvf_valid"] = json!(true);
                result["pairs"] = json!(field.len());
                match field.gradient_certificate() {
                    Ok(cert) => {
                        result["gradient"] = json!(true);
                        let census = field.census();
                        result["critical_counts"] = json!(census.critical_counts());
                        result["critical_simplices"] = simplices_json(
                            &census
                                .critical
                                .iter()
                                .flatten()
                                .cloned()
                                .collect::<Vec<_>>(),
                        );
                        // the certificate: a topological order per dimension
                        result["certificate"] = Value::Array(
                            (0..=k.dim())
                                .map(|q| simplices_json(cert.order(q)))
                                .collect(),
                        );
                    }
                    Err(trajectory) => {
                        failed = true;
                        result["gradient"] = json!(false);
                        result["closed_trajectory"] = simplices_json(&trajectory.faces);
                    }
                }
            }
        }
    }
    Ok(if failed {
        Report::fail("check", std::mem::take(inputs), result)
    } else {
        Report::pass("check", std::mem::take(inputs), result)
    })
}

fn cmd_hopf(
    inputs: &mut BTreeMap<String, String>,
    complex_path: &Path,
    dvf_path: &Path,
    map_arg: &str,
) -> Result<Report> {
    digest_into(inputs, complex_path)?;
    digest_into(inputs, dvf_path)?;
    let k = load_complex(complex_path)?;
    let field = load_dvf(dvf_path, k.clone())?;
    let phi = match map_arg {
        "identity" => ChainMap::identity(k.clone()),
        "zero" => ChainMap::zero(k.clone(), k.clone()),
        path => {
            let path = Path::new(path);
            digest_into(inputs, path)?;
            let f = load_map(path, k.clone(), k.clone())?;
            ChainMap::induced(&f)?
        }
    };
    let report = verify_hopf(&phi, &field)?;
    let result = json!({
        "lhs": report.lhs,
        "rhs": report.rhs,
        "equal": report.equal(),
    });
    Ok(if report.equal() {
        Report::pass("hopf", std::mem::take(inputs), result)
    } else {
        Report::fail("hopf", std::mem::take(inputs), result)
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_degree(
    cli: &Cli,
    inputs: &mut BTreeMap<String, String>,
    map_path: &Path,
    target_path: &Path,
    k: usize,
    dvf_path: Option<&Path>,
    target_action_path: Option<&Path>,
    source_action_path: Option<&Path>,
) -> Result<Report> {
    digest_into(inputs, map_path)?;
    digest_into(inputs, target_path)?;
    let target = load_complex(target_path)?;
    let tower = SubdivisionTower::build(target.clone(), k);
    let source = tower.top().clone();
    let f = load_map(map_path, source.clone(), target.clone())?;

    let witness = match dvf_path {
        Some(path) => {
            digest_into(inputs, path)?;
            SphereWitness::new(load_dvf(path, source.clone())?)?
        }
        None => derived_witness_on_tower(&tower, cli.backtrack_depth)?,
    };

    let degree = crate::sphere::combinatorial_degree(&f, &witness, &tower)?;
    let xi = crate::sphere::orientation_from_witness(&witness)?;
    let eta = crate::sphere::transported_orientation(&tower, &xi)?;
    let oracle_degree = crate::sphere::degree_oracle_preimage(&f, &xi, &eta)?;
    if oracle_degree != degree {
        return Err(Error::Integrity(format!(
            "oracle disagreement: chain-map degree {degree} vs signed preimage count {oracle_degree}"
        )));
    }
    let mut result = json!({
        "degree": degree,
        "oracle_degree": oracle_degree,
        "agree": true,
    });

    let mut failed = false;
    if let Some(tgt_action_path) = target_action_path {
        digest_into(inputs, tgt_action_path)?;
        let tgt_action = load_action(tgt_action_path, target.clone())?;
        let src_action = match source_action_path {
            Some(path) => {
                digest_into(inputs, path)?;
                load_action(path, source.clone())?
            }
            None => tgt_action.induced_on_tower(&tower)?,
        };
        let verdict =
            crate::action::verify_degree_mod_p(&f, &witness, &tower, &src_action, &tgt_action)?;
        result["equivariant"] = json!(true);
        result["p"] = json!(verdict.p);
        result["residue"] = json!(verdict.residue);
        result["pass"] = json!(verdict.pass);
        failed = !verdict.pass;
    }
    Ok(if failed {
        Report::fail("degree", std::mem::take(inputs), result)
    } else {
        Report::pass("degree", std::mem::take(inputs), result)
    })
}

/// A sphere witness on the top of a tower: derived on the base, then
/// transferred across each subdivision.
fn derived_witness_on_tower(tower: &SubdivisionTower, depth: usize) -> Result<SphereWitness> {
    let mut witness = derive_sphere_witness(tower.base(), depth)?;
    for _ in 0..tower.steps() {
        let (_, _, next) = sphere_witness_bd(&witness, depth)?;
        witness = next;
    }
    Ok(witness)
}

fn cmd_build(
    cli: &Cli,
    inputs: &mut BTreeMap<String, String>,
    target: &BuildTarget,
) -> Result<Report> {
    std::fs::create_dir_all(&cli.output_dir)?;
    let out = |name: &str| cli.output_dir.join(name);
    let mut written: Vec<PathBuf> = Vec::new();
    let mut result = json!({});

    match target {
        BuildTarget::Skeleton { n, q } => {
            let k = crate::complex::skeleton_of_simplex(*n, *q)?;
            let path = out(&format!("skeleton_{n}_{q}.complex.json"));
            write_json(&path, &ComplexFile::from_complex(&k))?;
            written.push(path);
            result["simplex_counts"] = json!(k.counts());
            if *q == *n - 1 {
                let w = crate::collapse::skeleton_sphere_witness(*n)?;
                let path = out(&format!("skeleton_{n}_{q}.dvf.json"));
                write_json(&path, &DvfFile::from_field(w.dvf()))?;
                written.push(path);
                result["witness"] = witness_summary(&w);
            }
        }
        BuildTarget::Cone { complex } => {
            digest_into(inputs, complex)?;
            let base = load_complex(complex)?;
            let apex = fresh_vertex(&base);
            let coned = cone(apex, &base)?;
            let field = cone_collapse_field(&coned, apex)?;
            field.require_gradient()?;
            let crit = field.critical_simplices();
            if crit.len() != 1 {
                return Err(Error::integrity(
                    "cone collapse field is not a collapsibility witness",
                ));
            }
            let cpath = out("cone.complex.json");
            write_json(&cpath, &ComplexFile::from_complex(&coned))?;
            let dpath = out("cone.dvf.json");
            write_json(&dpath, &DvfFile::from_field(&field))?;
            written.extend([cpath, dpath]);
            result["apex"] = json!(apex.0);
            result["simplex_counts"] = json!(coned.counts());
        }
        BuildTarget::Bd { complex, dvf } => {
            digest_into(inputs, complex)?;
            let base = load_complex(complex)?;
            let witness = match dvf {
                Some(path) => {
                    digest_into(inputs, path)?;
                    SphereWitness::new(load_dvf(path, base.clone())?)?
                }
                None => derive_sphere_witness(&base, cli.backtrack_depth)?,
            };
            let (bd, _, wbd) = sphere_witness_bd(&witness, cli.backtrack_depth)?;
            let cpath = out("bd.complex.json");
            write_json(&cpath, &ComplexFile::from_complex(&bd))?;
            let dpath = out("bd.dvf.json");
            write_json(&dpath, &DvfFile::from_field(wbd.dvf()))?;
            written.extend([cpath, dpath]);
            result["simplex_counts"] = json!(bd.counts());
            result["witness"] = witness_summary(&wbd);
        }
        BuildTarget::Join {
            left,
            right,
            dvf_left,
            dvf_right,
            action_left,
            action_right,
        } => {
            digest_into(inputs, left)?;
            digest_into(inputs, right)?;
            let kl = load_complex(left)?;
            let kr = load_complex(right)?;
            let wl = witness_from(&kl, dvf_left.as_deref(), cli.backtrack_depth, inputs)?;
            let wr = witness_from(&kr, dvf_right.as_deref(), cli.backtrack_depth, inputs)?;
            let (joined, emb, w) = gvf_join(&wl, &wr)?;
            let cpath = out("join.complex.json");
            write_json(&cpath, &ComplexFile::from_complex(&joined))?;
            let dpath = out("join.dvf.json");
            write_json(&dpath, &DvfFile::from_field(w.dvf()))?;
            written.extend([cpath, dpath]);
            result["simplex_counts"] = json!(joined.counts());
            result["witness"] = witness_summary(&w);
            if let (Some(la), Some(ra)) = (action_left, action_right) {
                digest_into(inputs, la)?;
                digest_into(inputs, ra)?;
                let al = load_action(la, kl)?;
                let ar = load_action(ra, kr)?;
                let diag = al.join(&ar, &joined, &emb)?;
                let apath = out("join.action.json");
                write_json(&apath, &ActionFile::from_action(&diag))?;
                written.push(apath);
                result["action_order"] = json!(diag.order());
            }
        }
        BuildTarget::ZpCircle { p, m } => {
            let (w, action) = crate::action::build_zp_circle(*p, *m)?;
            let stem = format!("zp_circle_{p}_{m}");
            let cpath = out(&format!("{stem}.complex.json"));
            write_json(&cpath, &ComplexFile::from_complex(w.complex()))?;
            let dpath = out(&format!("{stem}.dvf.json"));
            write_json(&dpath, &DvfFile::from_field(w.dvf()))?;
            let apath = out(&format!("{stem}.action.json"));
            write_json(&apath, &ActionFile::from_action(&action))?;
            written.extend([cpath, dpath, apath]);
            result["simplex_counts"] = json!(w.complex().counts());
            result["witness"] = witness_summary(&w);
        }
    }

    // every emitted file must re-parse to the identical canonical form
    for path in &written {
        reverify_round_trip(path)?;
    }
    result["files"] = Value::Array(
        written
            .iter()
            .map(|p| json!(p.display().to_string()))
            .collect(),
    );
    Ok(Report::pass("build", std::mem::take(inputs), result))
}

fn witness_from(
    k: &ComplexHandle,
    dvf: Option<&Path>,
    depth: usize,
    inputs: &mut BTreeMap<String, String>,
) -> Result<SphereWitness> {
    match dvf {
        Some(path) => {
            digest_into(inputs, path)?;
            SphereWitness::new(load_dvf(path, k.clone())?)
        }
        None => derive_sphere_witness(k, depth),
    }
}

fn witness_summary(w: &SphereWitness) -> Value {
    json!({
        "dimension": w.dim(),
        "top_cell": w.top_cell().vertices().iter().map(|v| v.0).collect::<Vec<_>>(),
        "base_vertex": w.base_vertex().vertices().iter().map(|v| v.0).collect::<Vec<_>>(),
        "pairs": w.dvf().len(),
    })
}

/// Emitted files must re-parse to an object whose canonical serialization
/// is byte-identical to what was written.
fn reverify_round_trip(path: &Path) -> Result<()> {
    let text = std::fs::read_to_string(path)?;
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
    let canon = if name.ends_with(".complex.json") {
        let file: ComplexFile = serde_json::from_str(&text)
            .map_err(|e| Error::Integrity(format!("emitted complex does not parse: {e}")))?;
        crate::io::to_canonical_json(&ComplexFile::from_complex(file.into_complex()?.as_ref()))?
    } else if name.ends_with(".dvf.json") {
        let file: DvfFile = serde_json::from_str(&text)
            .map_err(|e| Error::Integrity(format!("emitted field does not parse: {e}")))?;
        crate::io::to_canonical_json(&file)?
    } else if name.ends_with(".action.json") {
        let file: ActionFile = serde_json::from_str(&text)
            .map_err(|e| Error::Integrity(format!("emitted action does not parse: {e}")))?;
        crate::io::to_canonical_json(&file)?
    } else {
        return Err(Error::integrity("emitted file has an unknown extension"));
    };
    if canon != text {
        return Err(Error::Integrity(format!(
            "emitted file {} is not canonical",
            path.display()
        )));
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
struct BatchManifest {
    jobs: Vec<BatchJob>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "cmd", rename_all = "kebab-case")]
enum BatchJob {
    Check {
        complex: PathBuf,
        #[serde(default)]
        dvf: Option<PathBuf>,
    },
    Hopf {
        complex: PathBuf,
        dvf: PathBuf,
        #[serde(default = "identity_string")]
        map: String,
    },
    Degree {
        map: PathBuf,
        target: PathBuf,
        #[serde(default)]
        k: usize,
        #[serde(default)]
        dvf: Option<PathBuf>,
        #[serde(default)]
        target_action: Option<PathBuf>,
        #[serde(default)]
        source_action: Option<PathBuf>,
    },
    /// Seeded sweep of random (complex, gradient field, chain map) triples
    /// through the Hopf identity.
    HopfRandom {
        trials: usize,
        #[serde(default)]
        max_dim: Option<usize>,
        #[serde(default)]
        max_simplices: Option<usize>,
    },
}

fn identity_string() -> String {
    "identity".into()
}

fn cmd_batch(
    cli: &Cli,
    inputs: &mut BTreeMap<String, String>,
    manifest_path: &Path,
) -> Result<Report> {
    digest_into(inputs, manifest_path)?;
    let text = std::fs::read_to_string(manifest_path)?;
    let manifest: BatchManifest =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("manifest: {e}")))?;
    let base_dir = manifest_path
        .parent()
        .unwrap_or(Path::new("."))
        .to_path_buf();

    // fan out across worker threads, merge deterministically by job index
    let n = manifest.jobs.len();
    let mut slots: Vec<Option<Report>> = (0..n).map(|_| None).collect();
    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(n.max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slot_refs: Vec<std::sync::Mutex<&mut Option<Report>>> =
        slots.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= n {
                    break;
                }
                let report = run_batch_job(cli, &base_dir, &manifest.jobs[i]);
                **slot_refs[i].lock().expect("slot lock") = Some(report);
            });
        }
    });
    drop(slot_refs);

    let reports: Vec<Report> = slots.into_iter().map(|r| r.expect("job ran")).collect();
    let exit = reports.iter().map(|r| r.exit_code).max().unwrap_or(0);
    let result = json!({
        "jobs": reports.iter().map(|r| serde_json::to_value(r).expect("report")).collect::<Vec<_>>(),
    });
    let mut report = if exit == 0 {
        Report::pass("batch", std::mem::take(inputs), result)
    } else {
        Report::fail("batch", std::mem::take(inputs), result)
    };
    report.exit_code = exit;
    Ok(report)
}

fn run_batch_job(cli: &Cli, base_dir: &Path, job: &BatchJob) -> Report {
    let resolve = |p: &PathBuf| -> PathBuf {
        if p.is_absolute() {
            p.clone()
        } else {
            base_dir.join(p)
        }
    };
    let mut inputs = BTreeMap::new();
    let outcome = match job {
        BatchJob::Check { complex, dvf } => cmd_check(
            &mut inputs,
            &resolve(complex),
            dvf.as_ref().map(resolve).as_deref(),
        ),
        BatchJob::Hopf { complex, dvf, map } => {
            let map_arg = if map == "identity" || map == "zero" {
                map.clone()
            } else {
                resolve(&PathBuf::from(map)).display().to_string()
            };
            cmd_hopf(&mut inputs, &resolve(complex), &resolve(dvf), &map_arg)
        }
        BatchJob::Degree {
            map,
            target,
            k,
            dvf,
            target_action,
            source_action,
        } => cmd_degree(
            cli,
            &mut inputs,
            &resolve(map),
            &resolve(target),
            *k,
            dvf.as_ref().map(resolve).as_deref(),
            target_action.as_ref().map(resolve).as_deref(),
            source_action.as_ref().map(resolve).as_deref(),
        ),
        BatchJob::HopfRandom {
            trials,
            max_dim,
            max_simplices,
        } => hopf_random_job(
            cli.seed,
            *trials,
            max_dim.unwrap_or(3),
            max_simplices.unwrap_or(300),
        ),
    };
    match outcome {
        Ok(report) => report,
        Err(err) => Report::error("batch-job", inputs, &err),
    }
}

fn hopf_random_job(
    seed: u64,
    trials: usize,
    max_dim: usize,
    max_simplices: usize,
) -> Result<Report> {
    use crate::generate::{random_chain_map, random_complex, random_gradient_field, rng, MapKind};
    let mut r = rng(seed);
    let kinds = [MapKind::Identity, MapKind::Zero, MapKind::Induced];
    let mut checked = 0usize;
    for t in 0..trials {
        let k = random_complex(&mut r, max_dim, max_simplices);
        let v = random_gradient_field(&mut r, &k);
        let phi = random_chain_map(&mut r, &k, kinds[t % kinds.len()])?;
        let report = verify_hopf(&phi, &v)?;
        if !report.equal() {
            let result = json!({
                "trial": t,
                "lhs": report.lhs,
                "rhs": report.rhs,
                "complex": ComplexFile::from_complex(&k),
                "dvf": DvfFile::from_field(&v),
            });
            return Ok(Report::fail("hopf-random", BTreeMap::new(), result));
        }
        checked += 1;
    }
    Ok(Report::pass(
        "hopf-random",
        BTreeMap::new(),
        json!({ "trials": checked, "seed": seed, "all_equal": true }),
    ))
}
