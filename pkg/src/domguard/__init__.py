"""domguard: domination and eternal-domination toolkit for split and
chordal graphs."""

from .graph import (  # noqa: F401
    Graph,
    GraphError,
    NotApplicableError,
    parse_graph,
    split_partition,
    is_k1t_free,
    clique_tree,
    connected_components,
)
from .oracle import (  # noqa: F401
    Budget,
    BudgetExceededError,
    is_dominating,
    guards_move_reachable,
    medn_feasible,
    medn_oracle,
    edn_oracle,
    gamma_exact,
    alpha_exact,
)
from .splitsolve import (  # noqa: F401
    PaperInconsistencyError,
    solve_k13_free,
    solve_k14_2split,
    solve_k14_3split,
    solve_split_auto,
)
from .strategy import (  # noqa: F401
    DefenseStrategy,
    ClosureReport,
    verify_closure,
    strategy_k13,
    strategy_k14_2split,
    strategy_k14_3split,
    strategy_x3c,
    strategy_3dm,
    strategy_from_json,
    interactive_defender,
)
from .reductions import (  # noqa: F401
    X3CInstance,
    ThreeDMInstance,
    ConstructedGraph,
    build_gp2,
    build_gp3,
    build_gp5,
    reduce_x3c,
    reduce_3dm,
    x3c_exact_cover,
    threedm_perfect_matching,
)
