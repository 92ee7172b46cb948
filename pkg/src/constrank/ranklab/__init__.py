from ..linalg import rank_exact, rank_gauss
from ..tensor import LinearMatrixSpace
from .sl2 import ScanResult, ScanRow, sl2_scan, sl2_summand_matrix, summand_matrix_checks
from .verdict import (CandidateReport, PipelineReport, RankConfig, RankVerdict, TheoremConditions,
                      VerdictKind, corank1_pipeline, generic_rank_estimate, rank_at_closed_orbit,
                      theorem_conditions, verdict)
from .wedge import wedge_claim_holds, wedge_kernel_compare, wedge_theta

__all__ = [
    "rank_exact", "rank_gauss", "LinearMatrixSpace", "RankConfig", "RankVerdict", "VerdictKind",
    "TheoremConditions", "CandidateReport", "PipelineReport", "corank1_pipeline",
    "generic_rank_estimate", "rank_at_closed_orbit", "theorem_conditions", "verdict",
    "sl2_summand_matrix", "summand_matrix_checks", "sl2_scan", "ScanResult", "ScanRow",
    "wedge_theta", "wedge_kernel_compare", "wedge_claim_holds",
]
