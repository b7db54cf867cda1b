#pragma once

#include <coinv/core.hpp>
#include <coinv/combinatorics.hpp>
#include <coinv/monomial.hpp>
#include <coinv/polynomial.hpp>
#include <coinv/tableaux.hpp>
#include <coinv/symfunc.hpp>
#include <coinv/descent_monomials.hpp>
#include <coinv/representations.hpp>
#include <coinv/cyclotomic.hpp>
#include <coinv/oracle.hpp>
#include <coinv/points_ideal.hpp>
