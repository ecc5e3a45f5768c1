#ifndef QFA_QFA_HPP
#define QFA_QFA_HPP

#include <qfa/algebra.hpp>
#include <qfa/element.hpp>
#include <qfa/fock.hpp>
#include <qfa/format.hpp>
#include <qfa/laplace.hpp>
#include <qfa/monomial.hpp>
#include <qfa/permanent.hpp>
#include <qfa/rational.hpp>
#include <qfa/renorm.hpp>
#include <qfa/scalar.hpp>
#include <qfa/series.hpp>
#include <qfa/tmaps.hpp>

#endif
