use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use num_traits::ToPrimitive;
use serde::Serialize;

use super::manifest::{ExperimentManifest, Report};
use super::{Cli, Command, ExtentArgs, LatticeArgs, SizesArgs};
use crate::analysis::{
    audit_entry, bound_report, catalog_entries, certify_growth, classify_vertex_type,
    estimate_threshold_on, inflation_consistency_check, monte_carlo_estimate, parse_probability,
    row_growth_replay, spread_substitutions, verify_blocking, BoundFamily, TypeClass,
};
use crate::engine::{run_bootstrap, seed_explicit, seed_random};
use crate::tiling::svg::{render_svg, round_classes, ROUND_STYLE};
use crate::tiling::{
    build, build_archimedean, enumerate_vertex_types, inflate_3_12_12, substitute_hexagons,
    torus_side_for, Extent, Family, LatticeSpec, StripSequence, TilingPatch, Topology, VertexType,
};

fn parse_family(s: &str) -> Result<Family> {
    s.parse::<Family>().map_err(|e| anyhow!(e))
}

fn parse_cells(s: &str) -> Result<Extent> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("cells must look like WxH, got {s:?}"))?;
    Ok(Extent::Cells {
        width: w.trim().parse().context("cell width")?,
        height: h.trim().parse().context("cell height")?,
    })
}

impl LatticeArgs {
    fn spec(&self) -> Result<LatticeSpec> {
        let given = [
            self.family.is_some(),
            self.strips.is_some(),
            self.merged_rosettes,
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            bail!("give exactly one of --family, --strips, --merged-rosettes");
        }
        if let Some(s) = &self.strips {
            return Ok(LatticeSpec::Strips {
                sequence: s.parse::<StripSequence>()?,
            });
        }
        if self.merged_rosettes {
            return Ok(LatticeSpec::MergedRosettes);
        }
        let family = parse_family(self.family.as_deref().unwrap_or_default())?;
        if !(self.substitute.is_empty() && self.spread.is_none()) && family != Family::Hex {
            bail!("substitutions need --family 6.6.6");
        }
        if !self.substitute.is_empty() {
            return Ok(LatticeSpec::ModifiedHex {
                substitutions: self.substitute.clone(),
            });
        }
        Ok(family.into())
    }

    fn build(&self, extent: Extent, topology: Topology) -> Result<TilingPatch> {
        if let Some(n) = self.spread {
            let base = build_archimedean(Family::Hex, extent, topology)?;
            let targets: BTreeSet<usize> = spread_substitutions(&base, n)?.into_iter().collect();
            return Ok(substitute_hexagons(&base, &targets)?);
        }
        Ok(build(&self.spec()?, extent, topology)?)
    }
}

impl ExtentArgs {
    fn resolve(&self) -> Result<(Extent, Topology)> {
        let extent = match (&self.cells, self.t, self.rows) {
            (Some(c), None, None) => parse_cells(c)?,
            (None, Some(t), None) => Extent::Radius { t },
            (None, None, Some(rows)) => Extent::Rows {
                rows,
                width: self.width.unwrap_or(16),
            },
            (None, None, None) => bail!("give one of --cells, --t, --rows"),
            _ => bail!("--cells, --t and --rows are exclusive"),
        };
        let topology = match &self.topology {
            Some(s) => s.parse()?,
            None if matches!(extent, Extent::Radius { .. }) => Topology::Open,
            None => Topology::Torus,
        };
        Ok((extent, topology))
    }
}

impl SizesArgs {
    fn resolve(&self, lattice: &LatticeArgs) -> Result<Vec<Extent>> {
        let mut out: Vec<Extent> = self
            .cells
            .iter()
            .map(|c| parse_cells(c))
            .collect::<Result<_>>()?;
        if !self.faces.is_empty() {
            let family = match lattice.spec()? {
                LatticeSpec::Archimedean { family } => family,
                LatticeSpec::ModifiedHex { .. } => Family::Hex,
                other => bail!("--faces needs an Archimedean family, got {other}"),
            };
            for &n in &self.faces {
                let side = torus_side_for(family, n);
                out.push(Extent::Cells {
                    width: side,
                    height: side,
                });
            }
        }
        out.extend(self.rows.iter().map(|&rows| Extent::Rows {
            rows,
            width: self.width,
        }));
        if out.is_empty() {
            bail!("give at least one of --cells, --faces, --rows");
        }
        Ok(out)
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report<T: Serialize>(
    manifest: &ExperimentManifest,
    result: T,
    out: Option<&Path>,
) -> Result<()> {
    let text = serde_json::to_string_pretty(&Report { manifest, result })? + "\n";
    write_out(out, &text)
}

fn csv_text<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// CSV to `out` or stdout; the manifest beside the file, or on stderr.
fn csv_report<T: Serialize>(
    manifest: &ExperimentManifest,
    rows: &[T],
    out: Option<&Path>,
) -> Result<()> {
    write_out(out, &csv_text(rows)?)?;
    let m = serde_json::to_string_pretty(manifest)? + "\n";
    match out {
        Some(p) => fs::write(sidecar(p), m)?,
        None => eprint!("{m}"),
    }
    Ok(())
}

fn sidecar(p: &Path) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn outputs(paths: &[&Option<PathBuf>]) -> Vec<String> {
    paths
        .iter()
        .filter_map(|p| p.as_ref())
        .map(|p| p.display().to_string())
        .collect()
}

fn load_patch(path: &Path) -> Result<TilingPatch> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(TilingPatch::from_json(&text)?)
}

fn patch_from(
    path: &Option<PathBuf>,
    lattice: &LatticeArgs,
    extent: &ExtentArgs,
) -> Result<(TilingPatch, Vec<Extent>)> {
    match path {
        Some(p) => {
            let patch = load_patch(p)?;
            let e = patch.extent;
            Ok((patch, vec![e]))
        }
        None => {
            let (e, topo) = extent.resolve()?;
            Ok((lattice.build(e, topo)?, vec![e]))
        }
    }
}

#[derive(Serialize)]
struct EstimateRow {
    lattice: String,
    extent: String,
    faces: usize,
    p: f64,
    k: u32,
    trials: u64,
    percolated: u64,
    frequency: f64,
    ci_low: f64,
    ci_high: f64,
    master_seed: u64,
}

#[derive(Serialize)]
struct TypeRow {
    vertex_type: String,
    class: String,
    detail: String,
}

#[derive(Serialize)]
struct CensusRow {
    vertex_type: String,
    count: usize,
}

#[derive(Serialize)]
struct InflationAudit {
    dodecagons: usize,
    hexagons: usize,
    hex_signatures: bool,
    adjacency_preserved: bool,
    consistency: Option<crate::analysis::InflationReport>,
}

pub fn dispatch(cli: Cli, args: Vec<String>) -> Result<bool> {
    if let Some(n) = cli.jobs {
        // Fails only if a pool already exists, which is harmless here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    let (seed, from_flag) = match cli.seed {
        Some(s) => (s, true),
        None => (rand::random::<u64>(), false),
    };
    let name = |c: &Command| {
        format!("{c:?}")
            .split([' ', '{'])
            .next()
            .unwrap_or_default()
            .to_lowercase()
    };
    let mut m = ExperimentManifest::new(&name(&cli.command), &args);

    match cli.command {
        Command::Generate {
            lattice,
            extent,
            out,
            svg,
        } => {
            let (e, topo) = extent.resolve()?;
            let patch = lattice.build(e, topo)?;
            if let Some(p) = &svg {
                fs::write(p, render_svg(&patch, None, ""))?;
            }
            write_out(out.as_deref(), &(patch.to_json()? + "\n"))?;
            Ok(true)
        }

        Command::Simulate {
            patch,
            lattice,
            extent,
            p,
            seed_faces,
            seed_all,
            replay,
            k,
            out,
            svg,
        } => {
            m.outputs = outputs(&[&out, &svg]);
            if let Some(r) = replay {
                let family = parse_family(&r)?;
                let t = extent.t.unwrap_or(6);
                let rep = row_growth_replay(family, t)?;
                m.lattice = Some(family.into());
                m.extents = vec![Extent::Radius { t: t + 2 }];
                m.k_range = vec![rep.k];
                if let Some(path) = &svg {
                    fs::write(
                        path,
                        render_svg(&rep.patch, Some(&round_classes(&rep.rounds)), ROUND_STYLE),
                    )?;
                }
                let rounds: Vec<_> = (0..rep.rounds.len())
                    .filter_map(|f| rep.rounds[f].map(|r| serde_json::json!({"face": f, "round": r, "center": rep.patch.faces[f].center})))
                    .collect();
                let result = serde_json::json!({
                    "lattice": rep.patch.spec.to_string(),
                    "k": rep.k,
                    "t": rep.t,
                    "seed_face": rep.seed,
                    "initial": rep.initial.len(),
                    "rounds": rounds,
                });
                report(&m, result, out.as_deref())?;
                return Ok(true);
            }
            let k = k.ok_or_else(|| anyhow!("--k is required"))?;
            let (patch, extents) = patch_from(&patch, &lattice, &extent)?;
            m.lattice = Some(patch.spec.clone());
            m.extents = extents;
            m.k_range = vec![k];
            let state = if seed_all {
                seed_explicit(&patch, &(0..patch.len()).collect::<Vec<_>>())?
            } else if !seed_faces.is_empty() {
                seed_explicit(&patch, &seed_faces)?
            } else if let Some(p) = p {
                m.p_grid = vec![p];
                m = m.with_seed(seed, from_flag);
                seed_random(&patch, p, seed)?
            } else {
                bail!("give --p, --seed-faces or --seed-all");
            };
            let (state, outcome) = run_bootstrap(&patch, state, k)?;
            if let Some(path) = &svg {
                fs::write(
                    path,
                    render_svg(&patch, Some(&round_classes(&state.round)), ROUND_STYLE),
                )?;
            }
            let result = serde_json::json!({
                "lattice": patch.spec.to_string(),
                "faces": patch.len(),
                "k": k,
                "initial": state.initial_faces().len(),
                "percolated": outcome.percolated,
                "final_infected": outcome.final_infected_count,
                "rounds_elapsed": outcome.rounds_elapsed,
                "rounds": state.rounds_json(),
            });
            report(&m, result, out.as_deref())?;
            Ok(true)
        }

        Command::Estimate {
            lattice,
            sizes,
            p,
            k,
            trials,
            out,
        } => {
            let extents = sizes.resolve(&lattice)?;
            m.lattice = Some(lattice.spec()?);
            m.extents = extents.clone();
            m.p_grid = p.clone();
            m.k_range = k.clone();
            m.trials = Some(trials);
            m.outputs = outputs(&[&out]);
            m = m.with_seed(seed, from_flag);
            let mut rows = Vec::new();
            for &e in &extents {
                let patch = lattice.build(e, Topology::Torus)?;
                for &pp in &p {
                    for &kk in &k {
                        let est = monte_carlo_estimate(&patch, pp, kk, trials, seed)?;
                        rows.push(EstimateRow {
                            lattice: est.lattice,
                            extent: e.to_string(),
                            faces: est.faces,
                            p: est.p,
                            k: est.k,
                            trials: est.trials,
                            percolated: est.percolated,
                            frequency: est.frequency,
                            ci_low: est.ci_low,
                            ci_high: est.ci_high,
                            master_seed: est.master_seed,
                        });
                    }
                }
            }
            csv_report(&m, &rows, out.as_deref())?;
            Ok(true)
        }

        Command::Threshold {
            lattice,
            sizes,
            p,
            trials,
            out,
        } => {
            let extents = sizes.resolve(&lattice)?;
            let spec = lattice.spec()?;
            m.lattice = Some(spec.clone());
            m.extents = extents.clone();
            m.p_grid = vec![p];
            m.trials = Some(trials);
            m.outputs = outputs(&[&out]);
            m = m.with_seed(seed, from_flag);
            let patches = extents
                .iter()
                .map(|&e| lattice.build(e, Topology::Torus))
                .collect::<Result<Vec<_>>>()?;
            let est = estimate_threshold_on(&spec.to_string(), &patches, p, trials, seed)?;
            m.k_range = est
                .rows
                .iter()
                .map(|r| r.k)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            report(&m, est, out.as_deref())?;
            Ok(true)
        }

        Command::Certify {
            lattice,
            k,
            t,
            t_max,
            out,
        } => {
            let spec = lattice.spec()?;
            let k = match (k, &spec) {
                (Some(k), _) => k,
                (None, LatticeSpec::Archimedean { family }) => family.threshold(),
                (None, LatticeSpec::Strips { .. }) => 2,
                (None, other) => bail!("no default k for {other}"),
            };
            let t_max = t_max.unwrap_or(t);
            m.lattice = Some(spec.clone());
            m.extents = (t..=t_max).map(|t| Extent::Radius { t }).collect();
            m.k_range = vec![k];
            m.outputs = outputs(&[&out]);
            let certs = (t..=t_max)
                .map(|t| certify_growth(&spec, k, t))
                .collect::<crate::Result<Vec<_>>>()?;
            let ok = certs.iter().all(|c| c.passed());
            report(&m, certs, out.as_deref())?;
            Ok(ok)
        }

        Command::Bounds {
            family,
            p,
            t,
            sequence,
            out,
        } => {
            let fam: BoundFamily = family.parse()?;
            let prob = parse_probability(&p)?;
            let seq = match sequence {
                Some(s) => s.parse::<StripSequence>()?,
                None => StripSequence::mixed_example(),
            };
            if fam == BoundFamily::Strips {
                m.lattice = Some(LatticeSpec::Strips {
                    sequence: seq.clone(),
                });
            }
            m.outputs = outputs(&[&out]);
            let r = bound_report(fam, &prob, t, &seq)?;
            m.p_grid = prob.to_f64().into_iter().collect();
            report(&m, r, out.as_deref())?;
            Ok(true)
        }

        Command::Types {
            enumerate: _,
            classify,
            out,
        } => {
            m.outputs = outputs(&[&out]);
            if let Some(s) = classify {
                let v: VertexType = s.parse()?;
                report(
                    &m,
                    serde_json::json!({"vertex_type": v.to_string(), "classification": classify_vertex_type(&v)?}),
                    out.as_deref(),
                )?;
                return Ok(true);
            }
            let rows = enumerate_vertex_types()
                .iter()
                .map(|v| {
                    let (class, detail) = match classify_vertex_type(v)? {
                        TypeClass::Infeasible => ("infeasible", String::new()),
                        TypeClass::ForcesThresholdLe2 { witnesses } => {
                            ("threshold-at-most-2", witnesses.join(";"))
                        }
                        TypeClass::RigidLatticeType { family } => {
                            ("rigid", format!("threshold {}", family.threshold()))
                        }
                    };
                    Ok(TypeRow {
                        vertex_type: v.to_string(),
                        class: class.into(),
                        detail,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            csv_report(&m, &rows, out.as_deref())?;
            Ok(true)
        }

        Command::Census {
            patch,
            lattice,
            extent,
            out,
        } => {
            let (patch, extents) = patch_from(&patch, &lattice, &extent)?;
            m.lattice = Some(patch.spec.clone());
            m.extents = extents;
            m.outputs = outputs(&[&out]);
            let rows: Vec<CensusRow> = patch
                .vertex_census()
                .into_iter()
                .map(|(t, count)| CensusRow {
                    vertex_type: t.to_string(),
                    count,
                })
                .collect();
            csv_report(&m, &rows, out.as_deref())?;
            Ok(true)
        }

        Command::Inflate {
            patch,
            cells,
            p,
            trials,
            k,
            patch_out,
            out,
        } => {
            let base = match &patch {
                Some(path) => load_patch(path)?,
                None => {
                    build_archimedean(Family::TruncatedHex, parse_cells(&cells)?, Topology::Torus)?
                }
            };
            m.lattice = Some(base.spec.clone());
            m.extents = vec![base.extent];
            m.outputs = outputs(&[&patch_out, &out]);
            let (hex, image) = inflate_3_12_12(&base)?;
            let hex_signatures = base.topology == Topology::Open
                || hex
                    .vertex_census()
                    .keys()
                    .map(|t| t.to_string())
                    .eq(["6.6.6".to_string()]);
            let adjacency_preserved = (0..hex.len()).all(|a| {
                let mut got: Vec<usize> = hex.neighbors(a).iter().map(|&b| image[b]).collect();
                let mut want: Vec<usize> = base
                    .neighbors(image[a])
                    .iter()
                    .copied()
                    .filter(|&g| base.sides(g) == 12)
                    .collect();
                got.sort_unstable();
                want.sort_unstable();
                got == want
            });
            let consistency = match p {
                Some(p) => {
                    m.p_grid = vec![p];
                    m.k_range = vec![k];
                    m.trials = Some(trials);
                    m = m.with_seed(seed, from_flag);
                    Some(inflation_consistency_check(&base, p, k, trials, seed)?)
                }
                None => None,
            };
            if let Some(path) = &patch_out {
                fs::write(path, hex.to_json()? + "\n")?;
            }
            let audit = InflationAudit {
                dodecagons: image.len(),
                hexagons: hex.len(),
                hex_signatures,
                adjacency_preserved,
                consistency,
            };
            let ok = audit.hex_signatures
                && audit.adjacency_preserved
                && audit.consistency.as_ref().is_none_or(|c| c.consistent());
            report(&m, audit, out.as_deref())?;
            Ok(ok)
        }

        Command::Blocking {
            config,
            patch,
            faces,
            k,
            out,
        } => {
            m.outputs = outputs(&[&out]);
            if let Some(path) = &patch {
                let patch = load_patch(path)?;
                let k = k.ok_or_else(|| anyhow!("--k is required with --patch"))?;
                m.lattice = Some(patch.spec.clone());
                m.k_range = vec![k];
                let r = verify_blocking(&patch, &faces, k)?;
                report(&m, r, out.as_deref())?;
                return Ok(r.ok);
            }
            let entries = catalog_entries();
            let chosen: Vec<_> = match &config {
                Some(name) => {
                    let e = entries.get(name).ok_or_else(|| {
                        anyhow!(
                            "unknown configuration {name:?}; known: {:?}",
                            entries.keys().collect::<Vec<_>>()
                        )
                    })?;
                    vec![(name.clone(), e.clone())]
                }
                None => entries.into_iter().collect(),
            };
            let audits = chosen
                .iter()
                .map(|(n, e)| audit_entry(n, e))
                .collect::<crate::Result<Vec<_>>>()?;
            let ok = audits.iter().all(|a| a.passed());
            report(&m, audits, out.as_deref())?;
            Ok(ok)
        }
    }
}
