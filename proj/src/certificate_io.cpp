#include "farkas/certificate_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace farkas {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_array(std::ostringstream& out, const char* key, const Vector& v, bool& first) {
  out << (first ? "" : ",") << "\n  \"" << key << "\": [";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << fmt(v[i]);
  out << "]";
  first = false;
}

void emit_scalar(std::ostringstream& out, const char* key, const std::string& val, bool& first) {
  out << (first ? "" : ",") << "\n  \"" << key << "\": " << val;
  first = false;
}

Vector to_vector(const nlohmann::json& j) {
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(e.get<double>());
  return v;
}

}  // namespace

CertificateDocument CertificateDocument::from_result(const FeasibilityProblem& problem,
                                                     const DecideResult& result) {
  CertificateDocument doc;
  doc.m = problem.m();
  doc.n = problem.n();
  doc.rho = problem.rho;
  doc.route = route_name(result.route);
  doc.z_residual = result.identities.z_identity_residual;
  doc.w_identity_residual = result.identities.w_identity_residual;

  const SolverReport* carried = &result.reports.front();
  if (const auto* feas = std::get_if<FeasibleCertificate>(&result.certificate)) {
    doc.status = "feasible";
    doc.normality_guaranteed = feas->normality_guaranteed;
    doc.x_normal = feas->x;
    doc.u_star = feas->u_star;
    doc.w1 = feas->w1;
    doc.w2 = feas->w2;
    if (result.route == Route::Both) carried = &result.reports.back();  // dual produced it
  } else {
    const auto& infeas = std::get<InfeasibleCertificate>(result.certificate);
    doc.status = "infeasible";
    doc.normality_guaranteed = infeas.normality_guaranteed;
    doc.u_cert = infeas.u;
    doc.x_star = infeas.x_star;
    doc.z = infeas.z;
    // primal report is first for both Route::Primal and Route::Both
  }
  doc.iterations = carried->iterations;
  doc.objective = carried->objective;
  doc.grad_norm = carried->grad_norm;
  doc.converged = carried->converged;
  return doc;
}

Certificate CertificateDocument::to_certificate() const {
  if (status == "feasible") {
    FeasibleCertificate cert;
    if (!x_normal) raise(ErrorCode::ParseError, "feasible certificate lacks x_normal");
    cert.x = *x_normal;
    cert.normality_guaranteed = normality_guaranteed;
    cert.u_star = u_star;
    cert.w1 = w1;
    cert.w2 = w2;
    return cert;
  }
  if (status == "infeasible") {
    InfeasibleCertificate cert;
    if (!u_cert) raise(ErrorCode::ParseError, "infeasible certificate lacks u_cert");
    cert.u = *u_cert;
    cert.normality_guaranteed = normality_guaranteed;
    cert.x_star = x_star;
    cert.z = z;
    return cert;
  }
  raise(ErrorCode::ParseError, "certificate status must be 'feasible' or 'infeasible'");
}

std::string CertificateDocument::to_json() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  emit_scalar(out, "format", "\"farkas-certificate/1\"", first);
  emit_scalar(out, "status", "\"" + status + "\"", first);
  emit_scalar(out, "m", std::to_string(m), first);
  emit_scalar(out, "n", std::to_string(n), first);
  emit_scalar(out, "rho", fmt(rho), first);
  emit_scalar(out, "normality_guaranteed", normality_guaranteed ? "true" : "false", first);
  if (x_normal) emit_array(out, "x_normal", *x_normal, first);
  if (u_star) emit_array(out, "u_star", *u_star, first);
  if (w1) emit_array(out, "w1", *w1, first);
  if (w2) emit_scalar(out, "w2", fmt(*w2), first);
  if (u_cert) emit_array(out, "u_cert", *u_cert, first);
  if (x_star) emit_array(out, "x_star", *x_star, first);
  if (z) emit_array(out, "z", *z, first);
  out << ",\n  \"identities\": {";
  {
    bool f2 = true;
    std::ostringstream inner;
    if (z_residual) emit_scalar(inner, "z_residual", fmt(*z_residual), f2);
    if (w_identity_residual) emit_scalar(inner, "w_identity_residual", fmt(*w_identity_residual), f2);
    std::string s = inner.str();
    // indent nested keys one level deeper
    std::string indented;
    for (char c : s) {
      indented += c;
      if (c == '\n') indented += "  ";
    }
    out << indented << "\n  }";
  }
  out << ",\n  \"solver\": {";
  {
    bool f2 = true;
    std::ostringstream inner;
    emit_scalar(inner, "route", "\"" + route + "\"", f2);
    emit_scalar(inner, "iterations", std::to_string(iterations), f2);
    emit_scalar(inner, "objective", fmt(objective), f2);
    emit_scalar(inner, "grad_norm", fmt(grad_norm), f2);
    emit_scalar(inner, "converged", converged ? "true" : "false", f2);
    std::string s = inner.str();
    std::string indented;
    for (char c : s) {
      indented += c;
      if (c == '\n') indented += "  ";
    }
    out << indented << "\n  }";
  }
  out << "\n}\n";
  return out.str();
}

CertificateDocument CertificateDocument::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    CertificateDocument doc;
    doc.status = j.at("status").get<std::string>();
    doc.m = j.at("m").get<std::size_t>();
    doc.n = j.at("n").get<std::size_t>();
    doc.rho = j.at("rho").get<double>();
    doc.normality_guaranteed = j.value("normality_guaranteed", false);
    if (j.contains("x_normal")) doc.x_normal = to_vector(j["x_normal"]);
    if (j.contains("u_star")) doc.u_star = to_vector(j["u_star"]);
    if (j.contains("w1")) doc.w1 = to_vector(j["w1"]);
    if (j.contains("w2")) doc.w2 = j["w2"].get<double>();
    if (j.contains("u_cert")) doc.u_cert = to_vector(j["u_cert"]);
    if (j.contains("x_star")) doc.x_star = to_vector(j["x_star"]);
    if (j.contains("z")) doc.z = to_vector(j["z"]);
    if (j.contains("identities")) {
      const auto& ids = j["identities"];
      if (ids.contains("z_residual")) doc.z_residual = ids["z_residual"].get<double>();
      if (ids.contains("w_identity_residual"))
        doc.w_identity_residual = ids["w_identity_residual"].get<double>();
    }
    if (j.contains("solver")) {
      const auto& s = j["solver"];
      doc.route = s.value("route", "");
      doc.iterations = s.value("iterations", std::size_t{0});
      doc.objective = s.value("objective", 0.0);
      doc.grad_norm = s.value("grad_norm", 0.0);
      doc.converged = s.value("converged", false);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("certificate document malformed: ") + e.what());
  }
}

}  // namespace farkas
