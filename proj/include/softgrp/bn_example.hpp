#pragma once

#include "softgrp/soft_group.hpp"

namespace softgrp {

/// (G, BP(n)) over W_n with G(mu) = W_{hat(mu)}.
SoftGroup bipartition_soft_group(int n);

/// (F, SC(n)) over W_n with F(A) = W_{hat(Lambda(A))}.
SoftGroup composition_soft_group(int n);

/// (identity, Lambda) : (F, SC(n)) -> (G, BP(n)).
SoftHom lambda_soft_hom(int n);

}  // namespace softgrp
