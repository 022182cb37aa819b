from classica.evaluation.token_classes import Task, TokenClass, TokenClassIndex, classify_tokens, parse_task
from classica.evaluation.accuracy import ClassScore, EvalReport, accuracy_report, percentage
from classica.evaluation.grouped import ALL_COLUMN, ALL_ROW, GroupedReport, grouped_report
from classica.evaluation.deltas import ClassDelta, DeltaReport, class_delta_report, delta_report, format_delta
from classica.evaluation.confusion import ConfusionEntry, confusion_matrix
from classica.evaluation.morph_features import morph_feature_report
