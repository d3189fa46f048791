//! JSON interchange: instances (two forms, auto-detected), colorings, color
//! lists, assignments, labelings, and kernels. Writers emit deterministic
//! bytes for fixed inputs.

use serde::{Deserialize, Serialize};

use crate::chromatic::Coloring;
use crate::error::{Error, Result};
use crate::kernel::KernelResult;
use crate::listcolor::{ListAssignment, ListColoringOutput};
use crate::matroid::{BipartiteInstance, GeneralizedPartitionMatroid, MatroidPair};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidDto {
    parts: Vec<Vec<usize>>,
    caps: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDto {
    elements: usize,
    matroid1: MatroidDto,
    matroid2: MatroidDto,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BipartiteDto {
    left_caps: Vec<usize>,
    right_caps: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringDto {
    classes: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ListsDto {
    lists: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssignmentDto {
    assignment: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelsDto {
    labels: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KernelDto {
    kernel: Vec<usize>,
    rounds: usize,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn render<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("serialization cannot fail");
    out.push('\n');
    out
}

/// An instance parsed from either interchange form. The bipartite form
/// keeps its graph alongside the derived pair.
#[derive(Debug, Clone)]
pub enum ParsedInstance {
    Matroids(MatroidPair),
    Bipartite {
        graph: BipartiteInstance,
        pair: MatroidPair,
    },
}

impl ParsedInstance {
    pub fn pair(&self) -> &MatroidPair {
        match self {
            Self::Matroids(pair) => pair,
            Self::Bipartite { pair, .. } => pair,
        }
    }

    pub fn into_pair(self) -> MatroidPair {
        match self {
            Self::Matroids(pair) => pair,
            Self::Bipartite { pair, .. } => pair,
        }
    }
}

/// Parses an instance file, picking the form by key presence: `elements`
/// means the explicit two-matroid form, `left_caps` the bipartite form.
/// Bipartite instances become pairs over their edge set.
pub fn parse_instance(text: &str) -> Result<ParsedInstance> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let object = value
        .as_object()
        .ok_or_else(|| Error::Parse("instance file must be a JSON object".into()))?;
    if object.contains_key("elements") || object.contains_key("matroid1") {
        let dto: PairDto =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let m1 =
            GeneralizedPartitionMatroid::new(dto.elements, dto.matroid1.parts, dto.matroid1.caps)?;
        let m2 =
            GeneralizedPartitionMatroid::new(dto.elements, dto.matroid2.parts, dto.matroid2.caps)?;
        Ok(ParsedInstance::Matroids(MatroidPair::new(m1, m2)?))
    } else if object.contains_key("left_caps") {
        let dto: BipartiteDto =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let graph = BipartiteInstance::new(dto.left_caps, dto.right_caps, dto.edges)?;
        let (pair, _) = graph.to_matroid_pair()?;
        Ok(ParsedInstance::Bipartite { graph, pair })
    } else {
        Err(Error::Parse(
            "instance file has neither 'elements' nor 'left_caps'".into(),
        ))
    }
}

pub fn instance_to_json(pair: &MatroidPair) -> String {
    render(&PairDto {
        elements: pair.n_elements(),
        matroid1: MatroidDto {
            parts: pair.m1().parts().to_vec(),
            caps: pair.m1().caps().to_vec(),
        },
        matroid2: MatroidDto {
            parts: pair.m2().parts().to_vec(),
            caps: pair.m2().caps().to_vec(),
        },
    })
}

pub fn bipartite_to_json(graph: &BipartiteInstance) -> String {
    render(&BipartiteDto {
        left_caps: graph.left_caps().to_vec(),
        right_caps: graph.right_caps().to_vec(),
        edges: graph.edges().to_vec(),
    })
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let dto: ColoringDto = parse(text)?;
    Ok(Coloring::new(dto.classes))
}

pub fn coloring_to_json(coloring: &Coloring) -> String {
    render(&ColoringDto {
        classes: coloring.classes().to_vec(),
    })
}

pub fn parse_lists(text: &str) -> Result<ListAssignment> {
    let dto: ListsDto = parse(text)?;
    ListAssignment::new(dto.lists)
}

pub fn lists_to_json(la: &ListAssignment) -> String {
    render(&ListsDto {
        lists: la.lists().to_vec(),
    })
}

pub fn parse_assignment(text: &str) -> Result<ListColoringOutput> {
    let dto: AssignmentDto = parse(text)?;
    Ok(ListColoringOutput::new(dto.assignment))
}

pub fn assignment_to_json(out: &ListColoringOutput) -> String {
    render(&AssignmentDto {
        assignment: out.assignment().to_vec(),
    })
}

pub fn parse_labels(text: &str) -> Result<Vec<usize>> {
    let dto: LabelsDto = parse(text)?;
    Ok(dto.labels)
}

pub fn labels_to_json(labels: &[usize]) -> String {
    render(&LabelsDto {
        labels: labels.to_vec(),
    })
}

pub fn parse_kernel(text: &str) -> Result<Vec<usize>> {
    let dto: KernelDto = parse(text)?;
    Ok(dto.kernel)
}

pub fn kernel_to_json(result: &KernelResult) -> String {
    render(&KernelDto {
        kernel: result.kernel.clone(),
        rounds: result.rounds,
    })
}
