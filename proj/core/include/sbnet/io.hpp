#pragma once

#include <iosfwd>
#include <string>

#include "sbnet/assignment.hpp"
#include "sbnet/badic.hpp"
#include "sbnet/nets.hpp"
#include "sbnet/reduction.hpp"

namespace sbnet {

// Plain-text formats, one header line then one record per line. Writers
// emit canonical order so round trips are byte-identical; readers accept
// any order but reject duplicates, omissions and out-of-range records.
//
//   sbnet-signs v1 n=<n>     <k> <ix> <iy> <+1|-1>
//   sbnet-coeffs v1 n=<n>    <k> <ix> <iy> <p/q>
//   sbnet-net v1 b=<b> m=<m> d=2    <px> <py>
//   sbnet-perms v1 b=<b> m=<m>      <k> <ix> <iy> <pi(0)> ... <pi(b-1)>
//   sbnet-ext1d v1 n=<n>     <k> <idx> <+1|-1>

void write_signs(std::ostream& out, const SignAssignment& A);
SignAssignment read_signs(std::istream& in);

void write_coeffs(std::ostream& out, const CoefficientAssignment& A);
CoefficientAssignment read_coeffs(std::istream& in);

void write_net(std::ostream& out, const Net& P);
Net read_net(std::istream& in);

void write_perms(std::ostream& out, const PermAssignment& A);
PermAssignment read_perms(std::istream& in);

void write_ext1d(std::ostream& out, const IntervalSigns& E);
IntervalSigns read_ext1d(std::istream& in);

// File-path convenience wrappers; missing/unreadable files raise InputError.
SignAssignment read_signs_file(const std::string& path);
CoefficientAssignment read_coeffs_file(const std::string& path);
Net read_net_file(const std::string& path);
PermAssignment read_perms_file(const std::string& path);
IntervalSigns read_ext1d_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sbnet
