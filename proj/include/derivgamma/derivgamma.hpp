#ifndef DERIVGAMMA_DERIVGAMMA_HPP
#define DERIVGAMMA_DERIVGAMMA_HPP

#include <derivgamma/beta_gamma.hpp>
#include <derivgamma/core.hpp>
#include <derivgamma/digamma.hpp>
#include <derivgamma/hypergeometric.hpp>
#include <derivgamma/oracle.hpp>
#include <derivgamma/pochhammer.hpp>
#include <derivgamma/polygamma.hpp>
#include <derivgamma/verify.hpp>

#endif  // DERIVGAMMA_DERIVGAMMA_HPP
