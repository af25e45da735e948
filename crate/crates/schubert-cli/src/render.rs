//! Output DTOs and rendering. JSON output is canonical: fixed field
//! order, no floating point, coefficients and degrees as decimal strings
//! so arbitrary-precision consumers never truncate them.

use schubert::{
    checkerboard_color, Ch2Class, ChowClass, Color, CwClass, Error, Frame, GwDegree, IClass,
    Partition, ProblemReport, Twist, WClass,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy)]
pub struct Style {
    pub diagrams: bool,
    pub checkerboard: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TermDto {
    pub partition: Vec<u32>,
    pub coeff: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extra: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct EvenBasisEntry {
    pub partition: Vec<u32>,
    pub extra: String,
    pub twist: String,
    pub codim: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Dto {
    Class {
        ring: String,
        frame: String,
        terms: Vec<TermDto>,
    },
    IClass {
        frame: String,
        twist: String,
        free: Vec<TermDto>,
        torsion: Vec<TermDto>,
    },
    CwClass {
        frame: String,
        twist: String,
        chow: Vec<TermDto>,
        free: Vec<TermDto>,
        torsion: Vec<TermDto>,
    },
    Sq2 {
        frame: String,
        twist: String,
        input: Vec<TermDto>,
        result: Vec<TermDto>,
    },
    Lift {
        frame: String,
        partition: Vec<u32>,
        twist: String,
        chow: Vec<TermDto>,
        free: Vec<TermDto>,
        torsion: Vec<TermDto>,
    },
    Degree {
        frame: String,
        rank: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pos: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        neg: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        signature: Option<String>,
    },
    Mod2Degree {
        frame: String,
        value: String,
    },
    WittDegree {
        frame: String,
        value: String,
    },
    EvenBasis {
        frame: String,
        classes: Vec<EvenBasisEntry>,
    },
    Problem {
        frame: String,
        inputs: String,
        rank: String,
        signature_proxy: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        pos: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        neg: Option<String>,
        notes: Vec<String>,
    },
    Error {
        error: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        obstruction: Option<Vec<TermDto>>,
    },
}

pub struct Output {
    pub dto: Dto,
}

fn twist_label(tw: Twist) -> String {
    match tw {
        Twist::O => "o".into(),
        Twist::Det => "det".into(),
    }
}

fn chow_terms(x: &ChowClass) -> Vec<TermDto> {
    x.terms()
        .map(|(p, c)| TermDto {
            partition: p.parts().to_vec(),
            coeff: c.to_string(),
            extra: None,
        })
        .collect()
}

fn ch2_terms(x: &Ch2Class) -> Vec<TermDto> {
    x.terms()
        .map(|p| TermDto {
            partition: p.parts().to_vec(),
            coeff: "1 (mod 2)".into(),
            extra: None,
        })
        .collect()
}

fn w_terms(x: &WClass) -> Vec<TermDto> {
    x.diagram_terms()
        .map(|(diagram, extra, c)| TermDto {
            partition: diagram.parts().to_vec(),
            coeff: c.to_string(),
            extra: Some(extra.label().into()),
        })
        .collect()
}

pub fn chow_output(x: &ChowClass) -> Output {
    Output {
        dto: Dto::Class {
            ring: "chow".into(),
            frame: x.frame().to_string(),
            terms: chow_terms(x),
        },
    }
}

pub fn ch2_output(x: &Ch2Class) -> Output {
    Output {
        dto: Dto::Class {
            ring: "ch2".into(),
            frame: x.frame().to_string(),
            terms: ch2_terms(x),
        },
    }
}

pub fn w_output(x: &WClass) -> Output {
    Output {
        dto: Dto::Class {
            ring: "w".into(),
            frame: x.frame().to_string(),
            terms: w_terms(x),
        },
    }
}

pub fn i_output(x: &IClass) -> Output {
    Output {
        dto: Dto::IClass {
            frame: x.frame().to_string(),
            twist: twist_label(x.twist()),
            free: w_terms(x.free()),
            torsion: ch2_terms(x.torsion()),
        },
    }
}

pub fn cw_output(x: &CwClass) -> Output {
    Output {
        dto: Dto::CwClass {
            frame: x.frame().to_string(),
            twist: twist_label(x.twist()),
            chow: chow_terms(x.chow()),
            free: w_terms(x.ipart().free()),
            torsion: ch2_terms(x.ipart().torsion()),
        },
    }
}

pub fn sq2_output(frame: Frame, tw: Twist, input: &Ch2Class, result: &Ch2Class) -> Output {
    Output {
        dto: Dto::Sq2 {
            frame: frame.to_string(),
            twist: twist_label(tw),
            input: ch2_terms(input),
            result: ch2_terms(result),
        },
    }
}

pub fn lift_output(p: &Partition, lifted: &CwClass) -> Output {
    Output {
        dto: Dto::Lift {
            frame: lifted.frame().to_string(),
            partition: p.parts().to_vec(),
            twist: twist_label(lifted.twist()),
            chow: chow_terms(lifted.chow()),
            free: w_terms(lifted.ipart().free()),
            torsion: ch2_terms(lifted.ipart().torsion()),
        },
    }
}

pub fn degree_output(frame: Frame, deg: GwDegree) -> Output {
    let dto = match deg {
        GwDegree::Form(form) => Dto::Degree {
            frame: frame.to_string(),
            rank: form.rank().to_string(),
            pos: Some(form.pos().to_string()),
            neg: Some(form.neg().to_string()),
            signature: Some(form.signature().to_string()),
        },
        GwDegree::Plain(r) => Dto::Degree {
            frame: frame.to_string(),
            rank: r.to_string(),
            pos: None,
            neg: None,
            signature: None,
        },
    };
    Output { dto }
}

pub fn mod2_degree_output(frame: Frame, top_present: bool) -> Output {
    Output {
        dto: Dto::Mod2Degree {
            frame: frame.to_string(),
            value: if top_present {
                "1 (mod 2)".into()
            } else {
                "0 (mod 2)".into()
            },
        },
    }
}

pub fn witt_degree_output(frame: Frame, m: i128) -> Output {
    Output {
        dto: Dto::WittDegree {
            frame: frame.to_string(),
            value: format!("{m}<1>"),
        },
    }
}

pub fn even_basis_output(frame: Frame) -> Result<Output, Error> {
    let mut classes = Vec::new();
    for p in frame.partitions() {
        if !p.is_even(frame)? {
            continue;
        }
        let dec = p.decompose_even(frame)?;
        classes.push(EvenBasisEntry {
            partition: p.parts().to_vec(),
            extra: dec.extra.label().into(),
            twist: twist_label(dec.extra.twist()),
            codim: p.area().to_string(),
        });
    }
    classes.sort_by_key(|e| (e.codim.parse::<u64>().unwrap(), e.partition.clone()));
    Ok(Output {
        dto: Dto::EvenBasis {
            frame: frame.to_string(),
            classes,
        },
    })
}

pub fn problem_output(report: &ProblemReport) -> Output {
    let (pos, neg) = match report.gw {
        GwDegree::Form(f) => (Some(f.pos().to_string()), Some(f.neg().to_string())),
        GwDegree::Plain(_) => (None, None),
    };
    Output {
        dto: Dto::Problem {
            frame: report.frame.to_string(),
            inputs: report.inputs.clone(),
            rank: report.rank.to_string(),
            signature_proxy: report.signature_proxy.to_string(),
            pos,
            neg,
            notes: report.notes.clone(),
        },
    }
}

pub fn error_dto(err: &Error) -> Dto {
    let obstruction = match err {
        Error::NotLiftable { obstruction, .. } => Some(ch2_terms(obstruction)),
        _ => None,
    };
    Dto::Error {
        error: err.to_string(),
        obstruction,
    }
}

fn partition_text(parts: &[u32]) -> String {
    if parts.is_empty() {
        "0".into()
    } else {
        parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn diagram_art(parts: &[u32], checkerboard: bool) -> String {
    if parts.is_empty() {
        return "  (empty diagram)\n".into();
    }
    let mut out = String::new();
    for (r, &len) in parts.iter().enumerate() {
        out.push_str("  ");
        for c in 1..=len {
            if checkerboard {
                out.push(match checkerboard_color(r as u32 + 1, c) {
                    Color::Black => 'B',
                    Color::White => 'W',
                });
            } else {
                out.push('#');
            }
        }
        out.push('\n');
    }
    out
}

fn terms_text(terms: &[TermDto], style: Style) -> String {
    if terms.is_empty() {
        return "0\n".into();
    }
    let mut line = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            line.push_str(" + ");
        }
        let base = partition_text(&t.partition);
        let decorated = match t.extra.as_deref() {
            Some("ek") => format!("{base} [e_k]"),
            Some("eperp") => format!("{base} [e_perp]"),
            Some("r") => format!("{base} [R]"),
            _ => base,
        };
        if t.coeff == "1" || t.coeff == "1 (mod 2)" {
            line.push_str(&decorated);
        } else {
            line.push_str(&format!("{}*({})", t.coeff, decorated));
        }
    }
    line.push('\n');
    if style.diagrams {
        for t in terms {
            line.push_str(&diagram_art(&t.partition, style.checkerboard));
            line.push('\n');
        }
    }
    line
}

impl Output {
    pub fn render_text(&self, style: Style) -> String {
        match &self.dto {
            Dto::Class { ring, frame, terms } => {
                format!("{ring} class in {frame}:\n{}", terms_text(terms, style))
            }
            Dto::IClass {
                frame,
                twist,
                free,
                torsion,
            } => format!(
                "I-class in {frame}, twist {twist}\nfree:    {}torsion: {}",
                terms_text(free, style),
                terms_text(torsion, style)
            ),
            Dto::CwClass {
                frame,
                twist,
                chow,
                free,
                torsion,
            } => format!(
                "Chow-Witt class in {frame}, twist {twist}\nchow:    {}free:    {}torsion: {}",
                terms_text(chow, style),
                terms_text(free, style),
                terms_text(torsion, style)
            ),
            Dto::Sq2 { result, .. } => terms_text(result, style),
            Dto::Lift {
                frame,
                partition,
                twist,
                chow,
                free,
                torsion,
            } => format!(
                "canonical lift of {} in {frame}, twist {twist}\nchow:    {}free:    {}torsion: {}",
                partition_text(partition),
                terms_text(chow, style),
                terms_text(free, style),
                terms_text(torsion, style)
            ),
            Dto::Degree {
                rank,
                pos,
                neg,
                signature,
                ..
            } => match (pos, neg) {
                (Some(pos), Some(neg)) => format!(
                    "{pos}<1> + {neg}<-1>\nrank: {rank}\nsignature: {}\n",
                    signature.as_deref().unwrap_or("0")
                ),
                _ => format!("{rank}\n(top group is not GW-valued for this twist)\n"),
            },
            Dto::Mod2Degree { value, .. } | Dto::WittDegree { value, .. } => {
                format!("{value}\n")
            }
            Dto::EvenBasis { frame, classes } => {
                let mut out = format!("even diagrams in {frame}:\n");
                for e in classes {
                    out.push_str(&format!(
                        "  {:<16} extra={:<6} twist={:<4} codim={}\n",
                        partition_text(&e.partition),
                        e.extra,
                        e.twist,
                        e.codim
                    ));
                    if style.diagrams {
                        out.push_str(&diagram_art(&e.partition, style.checkerboard));
                    }
                }
                out
            }
            Dto::Problem {
                frame,
                inputs,
                rank,
                signature_proxy,
                pos,
                neg,
                notes,
            } => {
                let mut out = match (pos, neg) {
                    (Some(pos), Some(neg)) => format!("{pos}<1> + {neg}<-1>\n"),
                    _ => format!("{rank}\n"),
                };
                out.push_str(&format!(
                    "frame: {frame}\nproblem: {inputs}\nrank: {rank}\nsignature: {signature_proxy}\n"
                ));
                for n in notes {
                    out.push_str(&format!("note: {n}\n"));
                }
                out
            }
            Dto::Error { error, .. } => format!("error: {error}\n"),
        }
    }
}
