// Validates the CLI's JSON output against schema/cli_output.schema.json.
// Implements the subset of JSON Schema the file uses: type, properties,
// required, items, enum, const, oneOf, pattern, $ref into $defs.
//
// usage: json_schema_check <schema.json> <seaweed-binary>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

const json* g_schema_root = nullptr;

bool validate(const json& schema, const json& value);

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

bool validate(const json& schema, const json& value) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) return false;
    const json& target = (*g_schema_root)["$defs"][ref.substr(prefix.size())];
    return validate(target, value);
  }
  if (schema.contains("const") && schema["const"] != value) return false;
  if (schema.contains("enum")) {
    bool hit = false;
    for (const json& v : schema["enum"])
      if (v == value) hit = true;
    if (!hit) return false;
  }
  if (schema.contains("type")) {
    const json& t = schema["type"];
    if (t.is_string()) {
      if (!type_matches(t.get<std::string>(), value)) return false;
    } else {
      bool any = false;
      for (const json& alt : t)
        if (type_matches(alt.get<std::string>(), value)) any = true;
      if (!any) return false;
    }
  }
  if (schema.contains("pattern") && value.is_string()) {
    if (!std::regex_search(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
      return false;
  }
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const json& alt : schema["oneOf"])
      if (validate(alt, value)) ++hits;
    if (hits != 1) return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties"))
      for (auto& [key, sub] : schema["properties"].items())
        if (value.contains(key) && !validate(sub, value[key])) return false;
  }
  if (value.is_array() && schema.contains("items"))
    for (const json& item : value)
      if (!validate(schema["items"], item)) return false;
  return true;
}

std::string run(const std::string& cmd) {
  std::array<char, 4096> buf;
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  while (fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: json_schema_check <schema.json> <seaweed-binary>\n");
    return 2;
  }
  std::ifstream schema_file(argv[1]);
  if (!schema_file) {
    std::fprintf(stderr, "cannot open schema %s\n", argv[1]);
    return 2;
  }
  json schema = json::parse(schema_file);
  g_schema_root = &schema;

  const std::string bin = argv[2];
  const std::vector<std::string> invocations = {
      " index --gl 4 --a 2,2 --b 4 --method both --format json",
      " index --type C --rank 3 --marked 3 --method both --format json",
      " index --type D --rank 4 --marked 1 --method both --format json",
      " index --type A --rank 2 --marked 2 --lower-levi 2 --method both --format json",
      " cascade --type D --rank 4 --format json",
      " cascade --type A --rank 2 --format json",
      " counterexample --type G --rank 2 --format json",
      " enumerate --gl 3 --entries --format json",
  };

  int failures = 0;
  for (const std::string& args : invocations) {
    const std::string text = run(bin + args + " 2>/dev/null");
    json value;
    try {
      value = json::parse(text);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "FAIL %s: output is not JSON (%s)\n", args.c_str(), e.what());
      ++failures;
      continue;
    }
    if (!validate(schema, value)) {
      std::fprintf(stderr, "FAIL %s: schema violation\n", args.c_str());
      ++failures;
    } else {
      std::printf("ok  %s\n", args.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
