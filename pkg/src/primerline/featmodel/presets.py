"""Shipped preset feature models.

FIG8_SOURCE is the instructional-design specification model limited to the
features the adult-literacy write-up names explicitly. ADULT_LITERACY_SOURCE
is the family model the specification deriver recognizes by feature name.
"""

from __future__ import annotations

from .model import FeatureModel
from .parser import parse_model

FIG8_SOURCE = """\
featuremodel InstructionalDesignSpecification
root IDSpecification {
  mandatory GoalClassification {
    mandatory GoalPriority {
      alternative {High, Medium, Low}
    }
  }
  mandatory IPCL
  optional InstructionalDesignModel {
    alternative {MerrillModel, GagneModel, GenericActivity}
    optional MerrillModel {
      mandatory FirstPrinciples
    }
  }
  mandatory ProcessPattern {
    mandatory Play [1..25] {
      mandatory Act [1..25] {
        mandatory Scene [1..25] {
          mandatory Instruction [1..25]
        }
      }
    }
  }
}
"""

ADULT_LITERACY_SOURCE = """\
featuremodel AdultLiteracyInstructionalDesign
root InstructionalDesign {
  mandatory IPCL
  mandatory GoalsPattern {
    alternative {Plain3Rs, Bloom, ABCD}
  }
  mandatory ProcessPattern {
    alternative {EclecticMethod, PASI, GagneEvents}
    optional PASI {
      mandatory Play [1..25] {
        mandatory Act [1..25] {
          mandatory Scene [1..25] {
            mandatory Instruction [1..25]
          }
        }
      }
    }
  }
  optional InstructionalDesignModel {
    alternative {MerrillModel, GagneModel, GenericActivity}
    optional MerrillModel {
      mandatory FirstPrinciples
    }
  }
  mandatory ContentPattern {
    alternative {PrimerPages, FCRMT, PlainResources}
  }
  mandatory EvaluationPattern
  optional ContextPattern
  optional EnvironmentPattern
  constraint GagneEvents requires GagneModel
}
"""


def fig8_model() -> FeatureModel:
    return parse_model(FIG8_SOURCE)


def adult_literacy_model() -> FeatureModel:
    return parse_model(ADULT_LITERACY_SOURCE)
