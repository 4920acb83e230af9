"""Per-class cohesion and complexity metrics.

Six quantities per class, constructors excluded throughout:

* LCOM5 = (a - k*l) / (l - k*l), with l attributes, k methods, and a the
  summed count of distinct attributes each method accesses. Higher means
  less cohesive; undefined when l = 0 or k <= 1.
* NHD = 1 - 2/(l*k*(k-1)) * sum_j x_j*(k - x_j), with l distinct parameter
  types across the class, k methods, and x_j the number of methods with at
  least one parameter of type j. Higher means more cohesive; undefined when
  k < 2 or l = 0.
* Total cyclomatic complexity: 1 per method plus one per decision point
  (if, loop, case label, catch, ternary, short-circuit operator). On
  structured control flow this equals E - N + 2 of the per-method graph
  with compound predicates decomposed.
* Cognitive complexity total / average / min / max over methods, using the
  nesting-penalty rule set documented in `javamodel.body`.

Undefined is a value here (None), never an error; dropping such classes is
the pipeline's job.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .javamodel.model import (
    FLAT_EVENT_KINDS,
    MethodView,
    NESTING_EVENT_KINDS,
    SourceClass,
)


@dataclass
class ClassMetrics:
    lcom5: Optional[float]
    nhd: Optional[float]
    cc_total: int
    coco_total: int
    coco_avg: Optional[float]
    coco_min: Optional[int]
    coco_max: Optional[int]
    k: int
    l_attr: int
    l_types: int

    def has_undefined(self) -> bool:
        return (
            self.lcom5 is None
            or self.nhd is None
            or self.coco_avg is None
            or self.coco_min is None
            or self.coco_max is None
        )


def lcom5(cls: SourceClass) -> Optional[float]:
    k = len(cls.methods)
    l = len(cls.attributes)
    if l == 0 or k <= 1:
        return None
    a = sum(len(m.accessed_attributes) for m in cls.methods)
    return (a - k * l) / (l - k * l) + 0.0  # + 0.0 normalizes -0.0


def nhd(cls: SourceClass) -> Optional[float]:
    k = len(cls.methods)
    types = _distinct_parameter_types(cls)
    l = len(types)
    if k < 2 or l == 0:
        return None
    sigma = 0
    for t in types:
        x = sum(1 for m in cls.methods if t in m.parameter_types)
        sigma += x * (k - x)
    return 1.0 - (2.0 / (l * k * (k - 1))) * sigma + 0.0


def _distinct_parameter_types(cls: SourceClass):
    seen = set()
    for m in cls.methods:
        seen.update(m.parameter_types)
    return seen


def method_cc(method: MethodView) -> int:
    return 1 + method.decision_profile.total()


def method_coco(method: MethodView) -> int:
    score = 0
    for kind, depth in method.cognitive_events:
        if kind in NESTING_EVENT_KINDS:
            score += 1 + depth
        elif kind in FLAT_EVENT_KINDS:
            score += 1
    return score


def class_metrics(cls: SourceClass) -> ClassMetrics:
    k = len(cls.methods)
    ccs = [method_cc(m) for m in cls.methods]
    cocos = [method_coco(m) for m in cls.methods]
    if k == 0:
        coco_avg = coco_min = coco_max = None
    else:
        coco_avg = math.fsum(cocos) / k
        coco_min = min(cocos)
        coco_max = max(cocos)
    return ClassMetrics(
        lcom5=lcom5(cls),
        nhd=nhd(cls),
        cc_total=sum(ccs),
        coco_total=sum(cocos),
        coco_avg=coco_avg,
        coco_min=coco_min,
        coco_max=coco_max,
        k=k,
        l_attr=len(cls.attributes),
        l_types=len(_distinct_parameter_types(cls)),
    )
