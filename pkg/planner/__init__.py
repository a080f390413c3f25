from .circle_rules import tau, zeta, CircleRule, plan_circle
from .motion_planner import (PlannerQuery, AgreementSet, CoordinateValue, ConstantRule, MovingRule,
                             EvaluatedPoint, PlannerPath, classify, plan_skeleton, plan_product, evaluate)
from .planning import MotionPlanner, SkeletonPlanner, ProductPlanner, Planning
