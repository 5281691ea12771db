use serde::{Deserialize, Serialize};

/// Output format for reports and object dumps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Which partitions count as a splitting unit at a vertex: `Strict` demands
/// every partition of the tuple split the descending labels, `Weak` only one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitMode {
    Strict,
    Weak,
}

/// Compatibility notion between two-block partitions. `Nested` accepts a
/// pair when one distinguished block properly contains the other;
/// `Classical` additionally requires the complements to be disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompatMode {
    Nested,
    Classical,
}

/// Size caps for blow-up enumeration; these keep per-graph work bounded
/// without changing which statements are checked on the instances kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", default, deny_unknown_fields)]
pub struct BlowUpCaps {
    /// Largest chain length allowed at a single vertex.
    pub max_partitions_per_vertex: usize,
    /// Skip vertices of degree above this when enumerating blow-ups.
    pub max_vertex_degree: usize,
    /// Stop enumerating after this many blow-up tuples per graph.
    pub max_tuples_per_graph: usize,
}

impl Default for BlowUpCaps {
    fn default() -> Self {
        Self { max_partitions_per_vertex: 2, max_vertex_degree: 6, max_tuples_per_graph: 20000 }
    }
}

/// Knobs shared by the verification harness and the command line front end.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", default, deny_unknown_fields)]
pub struct RunConfig {
    /// Graph families run at each rank from 2 through this value.
    pub rank: i64,
    /// Vertex bound for graph enumeration.
    pub max_vertices: usize,
    /// Enumeration refuses vertex bounds above this.
    pub hard_vertex_bound: usize,
    /// Largest ground-set size for partition-complex sweeps.
    pub sigma_max_n: usize,
    pub blow_up_caps: BlowUpCaps,
    pub compat: CompatMode,
    pub split: SplitMode,
    pub format: OutputFormat,
    /// Worker threads for instance-level parallelism; 0 means one per core.
    pub jobs: usize,
    /// Seed for the randomized engine cross-checks.
    pub seed: u64,
    /// Smallest basepoint degree accepted by graph enumeration.
    pub min_basepoint_degree: usize,
    /// Emit wall-clock timings alongside results.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            rank: 3,
            max_vertices: 5,
            hard_vertex_bound: 6,
            sigma_max_n: 6,
            blow_up_caps: BlowUpCaps::default(),
            compat: CompatMode::Nested,
            split: SplitMode::Strict,
            format: OutputFormat::Text,
            jobs: 1,
            seed: 0x5eed_cafe,
            min_basepoint_degree: 1,
            timings: false,
        }
    }
}

impl RunConfig {
    /// Defaults, overridden by the JSON file named in `AUTERLAB_CONFIG` when
    /// that variable is set. Unknown keys are rejected, absent keys keep
    /// their defaults.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var("AUTERLAB_CONFIG") {
            Err(_) => Ok(Self::default()),
            Ok(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read config {path}: {e}"))?;
                Self::from_json(&text).map_err(|e| format!("bad config {path}: {e}"))
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_roundtrip() {
        let c = RunConfig::default();
        let back = RunConfig::from_json(&c.to_json()).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn partial_override_keeps_defaults() {
        let c = RunConfig::from_json(r#"{"rank": 2, "compat": "classical"}"#).unwrap();
        assert_eq!(c.rank, 2);
        assert_eq!(c.compat, CompatMode::Classical);
        assert_eq!(c.max_vertices, RunConfig::default().max_vertices);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(RunConfig::from_json(r#"{"no-such-knob": 1}"#).is_err());
    }
}
