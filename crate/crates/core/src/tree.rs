//! Multiway decision trees grown top-down with a pluggable split criterion.
//!
//! Stopping rules, checked at every node:
//!
//! 1. the partition is empty: a leaf carrying the parent's majority label;
//! 2. no usable feature remains (all used, or all constant on the partition):
//!    a leaf with the partition's majority label;
//! 3. the partition is single-class: a leaf with that class;
//! 4. the depth cap is reached: a majority leaf.
//!
//! Otherwise every remaining non-constant feature is scored, the best is
//! split on with one child per observed value, and it is removed from the
//! candidate set for the subtree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::criteria::{select_best, CriterionKind, FeatureScore};
use crate::data::Discretizer;
use crate::embedding::{AmplitudeMode, ContingencyTable};
use crate::error::{Error, Result};
use crate::order::natural_cmp;

pub const MODEL_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TreeConfig {
    pub criterion: CriterionKind,
    pub mode: AmplitudeMode,
    /// `None` grows the tree until the other stopping rules fire.
    pub max_depth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SplitKind {
    /// One branch per listed value.
    Multiway(Vec<String>),
    /// Two branches, `"le"` for values `<= t` and `"gt"` otherwise.
    Threshold(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitRule {
    pub feature: usize,
    pub kind: SplitKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TreeNode {
    Leaf {
        label: String,
        class_counts: BTreeMap<String, usize>,
    },
    Internal {
        rule: SplitRule,
        /// Branch key to subtree, in natural order of the keys.
        children: Vec<(String, TreeNode)>,
        /// Majority label of the training rows that reached this node.
        fallback: String,
    },
}

/// Majority label, ties to the smallest label in natural order.
fn majority(counts: &BTreeMap<String, usize>) -> Option<String> {
    counts
        .iter()
        .max_by(|(la, ca), (lb, cb)| ca.cmp(cb).then_with(|| natural_cmp(lb, la)))
        .map(|(l, _)| l.clone())
}

fn count_labels<L: AsRef<str>>(labels: &[L], rows: &[usize]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for &r in rows {
        *counts.entry(labels[r].as_ref().to_owned()).or_insert(0) += 1;
    }
    counts
}

/// Scores every non-constant candidate feature on the given rows.
pub fn score_features<V, L>(
    x: &[Vec<V>],
    y: &[L],
    rows: &[usize],
    available: &[usize],
    config: &TreeConfig,
) -> Result<Vec<FeatureScore>>
where
    V: AsRef<str>,
    L: AsRef<str>,
{
    let labels: Vec<&str> = rows.iter().map(|&r| y[r].as_ref()).collect();
    let mut scores = Vec::new();
    for &f in available {
        let column: Vec<&str> = rows
            .iter()
            .map(|&r| x[r].get(f).map(AsRef::as_ref).ok_or(Error::MissingFeatureValue(f)))
            .collect::<Result<_>>()?;
        let table = ContingencyTable::build(&column, &labels)?;
        if table.is_constant() {
            continue;
        }
        scores.push(FeatureScore {
            feature_index: f,
            score: config.criterion.score(&table, config.mode)?,
            direction: config.criterion.direction(),
        });
    }
    Ok(scores)
}

/// Grows a tree over `rows` of `(x, y)` using the features in `available`.
pub fn build_tree<V, L>(
    x: &[Vec<V>],
    y: &[L],
    rows: &[usize],
    available: &[usize],
    config: &TreeConfig,
) -> Result<TreeNode>
where
    V: AsRef<str>,
    L: AsRef<str>,
{
    if rows.is_empty() {
        return Err(Error::EmptyRootPartition);
    }
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            features: x.len(),
            labels: y.len(),
        });
    }
    grow(x, y, rows, available, config, 0, None)
}

fn grow<V, L>(
    x: &[Vec<V>],
    y: &[L],
    rows: &[usize],
    available: &[usize],
    config: &TreeConfig,
    depth: usize,
    parent_majority: Option<&str>,
) -> Result<TreeNode>
where
    V: AsRef<str>,
    L: AsRef<str>,
{
    let class_counts = count_labels(y, rows);
    let Some(label) = majority(&class_counts) else {
        return Ok(TreeNode::Leaf {
            label: parent_majority.unwrap_or_default().to_owned(),
            class_counts,
        });
    };
    let leaf = |class_counts| TreeNode::Leaf {
        label: label.clone(),
        class_counts,
    };

    if class_counts.len() == 1 || config.max_depth.is_some_and(|d| depth >= d) {
        return Ok(leaf(class_counts));
    }
    let scores = score_features(x, y, rows, available, config)?;
    if scores.is_empty() {
        return Ok(leaf(class_counts));
    }
    let feature = select_best(&scores)?;

    let mut partitions: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for &r in rows {
        partitions.entry(x[r][feature].as_ref()).or_default().push(r);
    }
    let mut branches: Vec<(&str, Vec<usize>)> = partitions.into_iter().collect();
    branches.sort_by(|a, b| natural_cmp(a.0, b.0));

    let remaining: Vec<usize> = available.iter().copied().filter(|&f| f != feature).collect();
    let mut children = Vec::with_capacity(branches.len());
    for (value, subset) in &branches {
        let child = grow(x, y, subset, &remaining, config, depth + 1, Some(&label))?;
        children.push(((*value).to_owned(), child));
    }
    Ok(TreeNode::Internal {
        rule: SplitRule {
            feature,
            kind: SplitKind::Multiway(branches.iter().map(|(v, _)| (*v).to_owned()).collect()),
        },
        children,
        fallback: label,
    })
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self, TreeNode::Leaf { .. })
    }

    /// Follows the branches matching `row`. Values not seen during training
    /// resolve to the node's fallback label.
    pub fn predict<V: AsRef<str>>(&self, row: &[V]) -> Result<&str> {
        let mut node = self;
        loop {
            match node {
                TreeNode::Leaf { label, .. } => return Ok(label),
                TreeNode::Internal {
                    rule,
                    children,
                    fallback,
                } => {
                    let value = row
                        .get(rule.feature)
                        .map(AsRef::as_ref)
                        .ok_or(Error::MissingFeatureValue(rule.feature))?;
                    let key = match rule.kind {
                        SplitKind::Multiway(_) => value,
                        SplitKind::Threshold(t) => {
                            let v: f64 = value.parse().map_err(|_| Error::MissingFeatureValue(rule.feature))?;
                            if v <= t {
                                "le"
                            } else {
                                "gt"
                            }
                        }
                    };
                    match children.iter().find(|(k, _)| k == key) {
                        Some((_, child)) => node = child,
                        None => return Ok(fallback),
                    }
                }
            }
        }
    }

    pub fn stats(&self) -> TreeStats {
        let mut leaf_depths = Vec::new();
        collect_leaf_depths(self, 0, &mut leaf_depths);
        TreeStats::from_leaf_depths(leaf_depths)
    }

    /// Feature indices on the path to every leaf, root first.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        fn walk(node: &TreeNode, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            match node {
                TreeNode::Leaf { .. } => out.push(prefix.clone()),
                TreeNode::Internal { rule, children, .. } => {
                    prefix.push(rule.feature);
                    for (_, c) in children {
                        walk(c, prefix, out);
                    }
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

fn collect_leaf_depths(node: &TreeNode, depth: usize, out: &mut Vec<usize>) {
    match node {
        TreeNode::Leaf { .. } => out.push(depth),
        TreeNode::Internal { children, .. } => {
            for (_, c) in children {
                collect_leaf_depths(c, depth + 1, out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeStats {
    pub depth: usize,
    pub leaf_count: usize,
    /// Leaf depths in left-to-right order.
    pub leaf_depths: Vec<usize>,
    /// All leaves at the same depth.
    pub balanced: bool,
}

impl TreeStats {
    fn from_leaf_depths(leaf_depths: Vec<usize>) -> Self {
        let depth = leaf_depths.iter().copied().max().unwrap_or(0);
        let balanced = leaf_depths.iter().all(|&d| d == depth);
        TreeStats {
            depth,
            leaf_count: leaf_depths.len(),
            leaf_depths,
            balanced,
        }
    }
}

pub fn tree_stats(node: &TreeNode) -> TreeStats {
    node.stats()
}

/// A trained tree plus what is needed to apply it to raw rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub criterion: CriterionKind,
    pub feature_names: Vec<String>,
    pub root: TreeNode,
    /// Bin edges for continuous columns, applied before descending.
    pub discretizer: Option<Discretizer>,
}

impl Model {
    /// Predicts from raw (pre-discretization) values.
    pub fn predict_raw<V: AsRef<str>>(&self, row: &[V]) -> Result<String> {
        match &self.discretizer {
            None => self.root.predict(row).map(str::to_owned),
            Some(d) => {
                let owned: Vec<String> = row.iter().map(|v| v.as_ref().to_owned()).collect();
                let binned = d.transform_values(&owned)?;
                self.root.predict(&binned).map(str::to_owned)
            }
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = ModelDoc {
            version: MODEL_VERSION,
            criterion: self.criterion.as_str().to_owned(),
            feature_names: self.feature_names.clone(),
            root: NodeDoc::from(&self.root),
            discretizer: self.discretizer.clone(),
        };
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ModelDoc = serde_json::from_str(text).map_err(|e| Error::MalformedModel(e.to_string()))?;
        if doc.version != MODEL_VERSION {
            return Err(Error::MalformedModel(format!("unsupported version {}", doc.version)));
        }
        let criterion = doc
            .criterion
            .parse()
            .map_err(|_| Error::MalformedModel(format!("unknown criterion {:?}", doc.criterion)))?;
        let root = doc.root.into_node(doc.feature_names.len())?;
        if let Some(d) = &doc.discretizer {
            if d.edges.len() != doc.feature_names.len() {
                return Err(Error::MalformedModel("discretizer does not match feature count".into()));
            }
        }
        Ok(Model {
            criterion,
            feature_names: doc.feature_names,
            root,
            discretizer: doc.discretizer,
        })
    }
}

pub fn serialize(model: &Model) -> Result<String> {
    model.to_json()
}

pub fn deserialize(text: &str) -> Result<Model> {
    Model::from_json(text)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    version: u32,
    criterion: String,
    #[serde(rename = "featureNames")]
    feature_names: Vec<String>,
    root: NodeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    discretizer: Option<Discretizer>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum NodeDoc {
    Leaf {
        label: String,
        counts: BTreeMap<String, usize>,
    },
    Internal {
        feature: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        threshold: Option<f64>,
        branches: BTreeMap<String, NodeDoc>,
        fallback: String,
    },
}

impl From<&TreeNode> for NodeDoc {
    fn from(node: &TreeNode) -> Self {
        match node {
            TreeNode::Leaf { label, class_counts } => NodeDoc::Leaf {
                label: label.clone(),
                counts: class_counts.clone(),
            },
            TreeNode::Internal {
                rule,
                children,
                fallback,
            } => NodeDoc::Internal {
                feature: rule.feature,
                threshold: match rule.kind {
                    SplitKind::Threshold(t) => Some(t),
                    SplitKind::Multiway(_) => None,
                },
                branches: children.iter().map(|(k, c)| (k.clone(), NodeDoc::from(c))).collect(),
                fallback: fallback.clone(),
            },
        }
    }
}

impl NodeDoc {
    fn into_node(self, num_features: usize) -> Result<TreeNode> {
        match self {
            NodeDoc::Leaf { label, counts } => Ok(TreeNode::Leaf {
                label,
                class_counts: counts,
            }),
            NodeDoc::Internal {
                feature,
                threshold,
                branches,
                fallback,
            } => {
                if feature >= num_features {
                    return Err(Error::MalformedModel(format!(
                        "feature index {feature} out of range for {num_features} features"
                    )));
                }
                if branches.is_empty() {
                    return Err(Error::MalformedModel("internal node without branches".into()));
                }
                let mut children = branches
                    .into_iter()
                    .map(|(k, c)| Ok((k, c.into_node(num_features)?)))
                    .collect::<Result<Vec<_>>>()?;
                children.sort_by(|a, b| natural_cmp(&a.0, &b.0));
                let kind = match threshold {
                    Some(t) => {
                        if children.iter().any(|(k, _)| k != "le" && k != "gt") {
                            return Err(Error::MalformedModel("threshold branches must be \"le\"/\"gt\"".into()));
                        }
                        SplitKind::Threshold(t)
                    }
                    None => SplitKind::Multiway(children.iter().map(|(k, _)| k.clone()).collect()),
                };
                Ok(TreeNode::Internal {
                    rule: SplitRule { feature, kind },
                    children,
                    fallback,
                })
            }
        }
    }
}

/// Indented one-branch-per-line rendering.
pub fn render(model: &Model) -> String {
    fn name(model: &Model, f: usize) -> String {
        model.feature_names.get(f).cloned().unwrap_or_else(|| format!("#{f}"))
    }
    fn leaf_text(label: &str, counts: &BTreeMap<String, usize>) -> String {
        let mut entries: Vec<(&String, &usize)> = counts.iter().collect();
        entries.sort_by(|a, b| natural_cmp(a.0, b.0));
        let counts: Vec<String> = entries.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        format!("leaf {label} {{{}}}", counts.join(", "))
    }
    fn walk(model: &Model, node: &TreeNode, indent: usize, out: &mut String) {
        if let TreeNode::Internal { rule, children, .. } = node {
            let feature = name(model, rule.feature);
            for (key, child) in children {
                let test = match rule.kind {
                    SplitKind::Multiway(_) => format!("{feature} = {key}"),
                    SplitKind::Threshold(t) if key == "le" => format!("{feature} <= {t}"),
                    SplitKind::Threshold(t) => format!("{feature} > {t}"),
                };
                let pad = "  ".repeat(indent);
                match child {
                    TreeNode::Leaf { label, class_counts } => {
                        out.push_str(&format!("{pad}{test} -> {}\n", leaf_text(label, class_counts)));
                    }
                    TreeNode::Internal { rule, fallback, .. } => {
                        out.push_str(&format!(
                            "{pad}{test} -> split on {} (fallback {fallback})\n",
                            name(model, rule.feature)
                        ));
                        walk(model, child, indent + 1, out);
                    }
                }
            }
        }
    }

    let mut out = String::new();
    match &model.root {
        TreeNode::Leaf { label, class_counts } => {
            out.push_str(&leaf_text(label, class_counts));
            out.push('\n');
        }
        TreeNode::Internal { rule, fallback, .. } => {
            out.push_str(&format!(
                "split on {} (fallback {fallback})\n",
                name(model, rule.feature)
            ));
            walk(model, &model.root, 1, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> (Vec<Vec<&'static str>>, Vec<&'static str>) {
        let x = vec![
            vec!["1", "1", "1"],
            vec!["0", "1", "0"],
            vec!["1", "0", "1"],
            vec!["0", "0", "1"],
        ];
        (x, vec!["1", "0", "0", "1"])
    }

    fn fit(criterion: CriterionKind) -> TreeNode {
        let (x, y) = toy();
        let config = TreeConfig {
            criterion,
            ..Default::default()
        };
        build_tree(&x, &y, &[0, 1, 2, 3], &[0, 1, 2], &config).unwrap()
    }

    fn root_feature(t: &TreeNode) -> usize {
        match t {
            TreeNode::Internal { rule, .. } => rule.feature,
            TreeNode::Leaf { .. } => panic!("root is a leaf"),
        }
    }

    #[test]
    fn fidelity_tree_is_balanced() {
        let t = fit(CriterionKind::Fidelity);
        assert_eq!(root_feature(&t), 0);
        let TreeNode::Internal { children, .. } = &t else {
            unreachable!()
        };
        for (_, c) in children {
            assert_eq!(root_feature(c), 1);
        }
        let s = t.stats();
        assert_eq!((s.depth, s.leaf_count, s.balanced), (2, 4, true));
    }

    #[test]
    fn cig_tree_is_unbalanced() {
        let t = fit(CriterionKind::Cig);
        assert_eq!(root_feature(&t), 2);
        let TreeNode::Internal { children, .. } = &t else {
            unreachable!()
        };
        assert_eq!(children[0].0, "0");
        assert_eq!(
            children[0].1,
            TreeNode::Leaf {
                label: "0".into(),
                class_counts: [("0".into(), 1)].into()
            }
        );
        let s = t.stats();
        assert!(!s.balanced);
        assert!(s.leaf_depths.contains(&1));
        assert_eq!(s.depth, 3);
    }

    #[test]
    fn trees_reproduce_training_labels() {
        let (x, y) = toy();
        for c in CriterionKind::ALL {
            let t = fit(c);
            for (row, label) in x.iter().zip(&y) {
                assert_eq!(t.predict(row).unwrap(), *label, "{c}");
            }
        }
    }

    #[test]
    fn single_class_partition_is_a_leaf() {
        let x = vec![vec!["0", "1"], vec!["1", "1"]];
        let y = vec!["1", "1"];
        for c in CriterionKind::ALL {
            let config = TreeConfig {
                criterion: c,
                ..Default::default()
            };
            let t = build_tree(&x, &y, &[0, 1], &[0, 1], &config).unwrap();
            assert_eq!(
                t,
                TreeNode::Leaf {
                    label: "1".into(),
                    class_counts: [("1".into(), 2)].into()
                }
            );
        }
    }

    #[test]
    fn no_features_gives_majority_with_low_tie_break() {
        let x = vec![vec!["0"], vec!["0"], vec!["1"], vec!["1"]];
        let y = vec!["b", "a", "b", "a"];
        let t = build_tree(&x, &y, &[0, 1, 2, 3], &[], &TreeConfig::default()).unwrap();
        assert!(matches!(t, TreeNode::Leaf { ref label, .. } if label == "a"));
        // only constant features left behaves the same way
        let x = vec![vec!["0"], vec!["0"]];
        let y = vec!["2", "10"];
        let t = build_tree(&x, &y, &[0, 1], &[0], &TreeConfig::default()).unwrap();
        assert!(matches!(t, TreeNode::Leaf { ref label, .. } if label == "2"));
    }

    #[test]
    fn depth_cap_forces_leaves() {
        let (x, y) = toy();
        let config = TreeConfig {
            max_depth: Some(1),
            ..Default::default()
        };
        let t = build_tree(&x, &y, &[0, 1, 2, 3], &[0, 1, 2], &config).unwrap();
        assert_eq!(t.stats().depth, 1);
        let config = TreeConfig {
            max_depth: Some(0),
            ..Default::default()
        };
        assert!(build_tree(&x, &y, &[0, 1, 2, 3], &[0, 1, 2], &config)
            .unwrap()
            .is_leaf());
    }

    #[test]
    fn empty_root_rejected() {
        let (x, y) = toy();
        assert!(matches!(
            build_tree(&x, &y, &[], &[0], &TreeConfig::default()),
            Err(Error::EmptyRootPartition)
        ));
    }

    #[test]
    fn unseen_value_uses_fallback() {
        let t = fit(CriterionKind::Fidelity);
        // root splits on X1; "7" was never seen, root majority of 2/2 ties to "0"
        assert_eq!(t.predict(&["7", "1", "1"]).unwrap(), "0");
        assert!(matches!(t.predict(&[] as &[&str]), Err(Error::MissingFeatureValue(0))));
    }

    #[test]
    fn paths_use_each_feature_once() {
        for c in CriterionKind::ALL {
            for path in fit(c).paths() {
                let mut p = path.clone();
                p.sort_unstable();
                p.dedup();
                assert_eq!(p.len(), path.len());
            }
        }
    }

    #[test]
    fn single_leaf_stats() {
        let leaf = TreeNode::Leaf {
            label: "1".into(),
            class_counts: [("1".into(), 3)].into(),
        };
        assert_eq!(
            tree_stats(&leaf),
            TreeStats {
                depth: 0,
                leaf_count: 1,
                leaf_depths: vec![0],
                balanced: true
            }
        );
    }

    fn model(root: TreeNode) -> Model {
        Model {
            criterion: CriterionKind::Fidelity,
            feature_names: vec!["X1".into(), "X2".into(), "X3".into()],
            root,
            discretizer: None,
        }
    }

    #[test]
    fn model_round_trip() {
        let leaf = model(TreeNode::Leaf {
            label: "1".into(),
            class_counts: [("1".into(), 3)].into(),
        });
        assert_eq!(deserialize(&serialize(&leaf).unwrap()).unwrap(), leaf);

        let m = model(fit(CriterionKind::Fidelity));
        let text = serialize(&m).unwrap();
        let back = deserialize(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(serialize(&back).unwrap(), text);
        let (x, _) = toy();
        for row in &x {
            assert_eq!(back.root.predict(row).unwrap(), m.root.predict(row).unwrap());
        }
    }

    #[test]
    fn threshold_rule_round_trip_and_predict() {
        let leaf = |l: &str| TreeNode::Leaf {
            label: l.into(),
            class_counts: [(l.into(), 1)].into(),
        };
        let m = model(TreeNode::Internal {
            rule: SplitRule {
                feature: 0,
                kind: SplitKind::Threshold(2.5),
            },
            children: vec![("gt".into(), leaf("b")), ("le".into(), leaf("a"))],
            fallback: "a".into(),
        });
        let back = deserialize(&serialize(&m).unwrap()).unwrap();
        assert_eq!(back.root.predict(&["1.0", "", ""]).unwrap(), "a");
        assert_eq!(back.root.predict(&["3", "", ""]).unwrap(), "b");
    }

    #[test]
    fn malformed_documents() {
        let text = serialize(&model(fit(CriterionKind::Cig))).unwrap();
        assert!(matches!(
            deserialize(&text[..text.len() / 2]),
            Err(Error::MalformedModel(_))
        ));
        assert!(matches!(deserialize("{}"), Err(Error::MalformedModel(_))));
        let bad_version = text.replace("\"version\": 1", "\"version\": 9");
        assert!(matches!(deserialize(&bad_version), Err(Error::MalformedModel(_))));
        let bad_feature = text.replace("\"feature\": 2", "\"feature\": 7");
        assert!(matches!(deserialize(&bad_feature), Err(Error::MalformedModel(_))));
    }

    #[test]
    fn document_shape() {
        let text = serialize(&model(TreeNode::Leaf {
            label: "1".into(),
            class_counts: [("1".into(), 3)].into(),
        }))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["criterion"], "fidelity");
        assert_eq!(v["featureNames"][0], "X1");
        assert_eq!(v["root"]["leaf"]["label"], "1");
        assert_eq!(v["root"]["leaf"]["counts"]["1"], 3);
    }

    #[test]
    fn render_shapes() {
        let fid = render(&model(fit(CriterionKind::Fidelity)));
        assert_eq!(
            fid,
            "split on X1 (fallback 0)\n\
             \x20 X1 = 0 -> split on X2 (fallback 0)\n\
             \x20   X2 = 0 -> leaf 1 {1: 1}\n\
             \x20   X2 = 1 -> leaf 0 {0: 1}\n\
             \x20 X1 = 1 -> split on X2 (fallback 0)\n\
             \x20   X2 = 0 -> leaf 0 {0: 1}\n\
             \x20   X2 = 1 -> leaf 1 {1: 1}\n"
        );
        let cig = render(&model(fit(CriterionKind::Cig)));
        assert!(cig.starts_with("split on X3"));
        assert!(cig.contains("\n  X3 = 0 -> leaf 0 {0: 1}\n"));
        let leaf = render(&model(TreeNode::Leaf {
            label: "1".into(),
            class_counts: [("1".into(), 3)].into(),
        }));
        assert_eq!(leaf, "leaf 1 {1: 3}\n");
    }
}
