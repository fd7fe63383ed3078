#include "longtail/coco.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "longtail/errors.hpp"

namespace longtail {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::vector<Id> DatasetIndex::image_ids() const {
  std::vector<Id> ids;
  ids.reserve(images.size());
  for (const auto& [id, _] : images) ids.push_back(id);
  return ids;
}

std::vector<Id> DatasetIndex::category_ids() const {
  std::vector<Id> ids;
  ids.reserve(categories.size());
  for (const auto& [id, _] : categories) ids.push_back(id);
  return ids;
}

bool structurally_equal(const DatasetIndex& a, const DatasetIndex& b) {
  return a.images == b.images && a.annotations == b.annotations &&
         a.categories == b.categories && a.images_by_category == b.images_by_category;
}

void reindex(DatasetIndex& index) {
  for (auto& [_, image] : index.images) image.annotation_ids.clear();
  index.images_by_category.clear();
  for (const auto& [cid, _] : index.categories) index.images_by_category[cid] = {};

  std::map<Id, std::set<Id>> by_category;
  for (const auto& [aid, ann] : index.annotations) {
    index.images.at(ann.image_id).annotation_ids.push_back(aid);
    if (!ann.iscrowd) by_category[ann.category_id].insert(ann.image_id);
  }
  for (const auto& [cid, image_set] : by_category) {
    index.images_by_category[cid].assign(image_set.begin(), image_set.end());
  }
}

namespace {

const json& require_field(const json& obj, const char* field, const char* entity) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw SchemaError(std::string(entity) + " entry is missing required field '" + field + "'");
  }
  return *it;
}

Id require_id(const json& obj, const char* field, const char* entity) {
  const json& v = require_field(obj, field, entity);
  if (!v.is_number_integer()) {
    throw SchemaError(std::string(entity) + " field '" + field + "' must be an integer");
  }
  return v.get<Id>();
}

double require_number(const json& obj, const char* field, const char* entity) {
  const json& v = require_field(obj, field, entity);
  if (!v.is_number()) {
    throw SchemaError(std::string(entity) + " field '" + field + "' must be a number");
  }
  return v.get<double>();
}

}  // namespace

DatasetIndex parse_coco(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw SchemaError("top-level value must be an object");
  for (const char* field : {"images", "annotations", "categories"}) {
    auto it = doc.find(field);
    if (it == doc.end()) throw SchemaError(std::string("document is missing required field '") + field + "'");
    if (!it->is_array()) throw SchemaError(std::string("field '") + field + "' must be an array");
  }

  DatasetIndex index;

  for (const json& c : doc["categories"]) {
    const Id id = require_id(c, "id", "category");
    const json& name = require_field(c, "name", "category");
    if (!name.is_string()) throw SchemaError("category field 'name' must be a string");
    if (!index.categories.emplace(id, name.get<std::string>()).second) {
      throw IntegrityError("duplicate category id " + std::to_string(id));
    }
  }

  for (const json& im : doc["images"]) {
    ImageRecord rec;
    rec.id = require_id(im, "id", "image");
    const json& fn = require_field(im, "file_name", "image");
    if (!fn.is_string()) throw SchemaError("image field 'file_name' must be a string");
    rec.file_name = fn.get<std::string>();
    rec.width = static_cast<int>(require_number(im, "width", "image"));
    rec.height = static_cast<int>(require_number(im, "height", "image"));
    if (rec.width <= 0 || rec.height <= 0) {
      throw IntegrityError("image " + std::to_string(rec.id) + " has nonpositive dimensions");
    }
    const Id id = rec.id;
    if (!index.images.emplace(id, std::move(rec)).second) {
      throw IntegrityError("duplicate image id " + std::to_string(id));
    }
  }

  for (const json& a : doc["annotations"]) {
    Annotation ann;
    ann.id = require_id(a, "id", "annotation");
    ann.image_id = require_id(a, "image_id", "annotation");
    ann.category_id = require_id(a, "category_id", "annotation");
    const json& bbox = require_field(a, "bbox", "annotation");
    if (!bbox.is_array() || bbox.size() != 4) {
      throw SchemaError("annotation field 'bbox' must be an array of 4 numbers");
    }
    ann.bbox = BBox{bbox[0].get<double>(), bbox[1].get<double>(), bbox[2].get<double>(),
                    bbox[3].get<double>()};
    const json& crowd = require_field(a, "iscrowd", "annotation");
    if (crowd.is_boolean()) {
      ann.iscrowd = crowd.get<bool>();
    } else if (crowd.is_number_integer()) {
      ann.iscrowd = crowd.get<int>() != 0;
    } else {
      throw SchemaError("annotation field 'iscrowd' must be 0/1 or a boolean");
    }

    auto image_it = index.images.find(ann.image_id);
    if (image_it == index.images.end()) {
      throw IntegrityError("annotation " + std::to_string(ann.id) +
                           " references unknown image " + std::to_string(ann.image_id));
    }
    if (index.categories.find(ann.category_id) == index.categories.end()) {
      throw IntegrityError("annotation " + std::to_string(ann.id) +
                           " references unknown category " + std::to_string(ann.category_id));
    }

    const ImageRecord& img = image_it->second;
    const BBox clamped = clamp_to(ann.bbox, img.width, img.height);
    if (is_empty(clamped)) {
      ++index.ingest.dropped_boxes;
      continue;
    }
    if (clamped != ann.bbox) ++index.ingest.clamped_boxes;
    ann.bbox = clamped;

    const Id id = ann.id;
    if (!index.annotations.emplace(id, ann).second) {
      throw IntegrityError("duplicate annotation id " + std::to_string(id));
    }
  }

  reindex(index);
  return index;
}

std::vector<std::string> validate(const DatasetIndex& index) {
  std::vector<std::string> violations;
  auto report = [&violations](std::string message) { violations.push_back(std::move(message)); };

  for (const auto& [id, img] : index.images) {
    if (img.id != id) report("image " + std::to_string(id) + ": key does not match record id");
    if (img.width <= 0 || img.height <= 0) {
      report("image " + std::to_string(id) + ": dimensions must be positive");
    }
    for (Id aid : img.annotation_ids) {
      auto it = index.annotations.find(aid);
      if (it == index.annotations.end()) {
        report("image " + std::to_string(id) + ": annotation_ids references unknown annotation " +
               std::to_string(aid));
      } else if (it->second.image_id != id) {
        report("image " + std::to_string(id) + ": annotation " + std::to_string(aid) +
               " belongs to image " + std::to_string(it->second.image_id));
      }
    }
  }

  for (const auto& [id, ann] : index.annotations) {
    if (ann.id != id) report("annotation " + std::to_string(id) + ": key does not match record id");
    auto image_it = index.images.find(ann.image_id);
    if (image_it == index.images.end()) {
      report("annotation " + std::to_string(id) + ": dangling image_id " +
             std::to_string(ann.image_id));
    } else {
      const ImageRecord& img = image_it->second;
      const auto& ids = img.annotation_ids;
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        report("annotation " + std::to_string(id) + ": missing from image " +
               std::to_string(img.id) + " annotation_ids");
      }
      if (!(ann.bbox.w > 0.0 && ann.bbox.h > 0.0)) {
        report("annotation " + std::to_string(id) + ": bbox width and height must be positive");
      } else if (ann.bbox.x < 0.0 || ann.bbox.y < 0.0 || ann.bbox.x2() > img.width ||
                 ann.bbox.y2() > img.height) {
        report("annotation " + std::to_string(id) + ": bbox extends past image bounds");
      }
    }
    if (index.categories.find(ann.category_id) == index.categories.end()) {
      report("annotation " + std::to_string(id) + ": dangling category_id " +
             std::to_string(ann.category_id));
    }
  }

  // images_by_category must exactly mirror the non-crowd annotations.
  std::map<Id, std::set<Id>> expected;
  for (const auto& [cid, _] : index.categories) expected[cid] = {};
  for (const auto& [_, ann] : index.annotations) {
    if (!ann.iscrowd && index.categories.count(ann.category_id) &&
        index.images.count(ann.image_id)) {
      expected[ann.category_id].insert(ann.image_id);
    }
  }
  for (const auto& [cid, list] : index.images_by_category) {
    if (!index.categories.count(cid)) {
      report("category " + std::to_string(cid) + ": images_by_category entry for unknown category");
      continue;
    }
    std::set<Id> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!seen.insert(list[i]).second) {
        report("category " + std::to_string(cid) + ": image " + std::to_string(list[i]) +
               " listed more than once");
      }
      if (i > 0 && list[i] <= list[i - 1]) {
        report("category " + std::to_string(cid) + ": image list not sorted ascending at index " +
               std::to_string(i));
      }
      if (!expected[cid].count(list[i])) {
        report("category " + std::to_string(cid) + ": image " + std::to_string(list[i]) +
               " has no countable annotation of this category");
      }
    }
    for (Id iid : expected[cid]) {
      if (!seen.count(iid)) {
        report("category " + std::to_string(cid) + ": image " + std::to_string(iid) +
               " missing from images_by_category");
      }
    }
  }
  for (const auto& [cid, _] : expected) {
    if (!index.images_by_category.count(cid)) {
      report("category " + std::to_string(cid) + ": missing images_by_category entry");
    }
  }

  return violations;
}

std::string write_manifest(const DatasetIndex& index) {
  ojson doc;
  doc["images"] = ojson::array();
  for (const auto& [_, img] : index.images) {
    ojson j;
    j["id"] = img.id;
    j["file_name"] = img.file_name;
    j["width"] = img.width;
    j["height"] = img.height;
    doc["images"].push_back(std::move(j));
  }
  doc["annotations"] = ojson::array();
  for (const auto& [_, ann] : index.annotations) {
    ojson j;
    j["id"] = ann.id;
    j["image_id"] = ann.image_id;
    j["category_id"] = ann.category_id;
    j["bbox"] = {ann.bbox.x, ann.bbox.y, ann.bbox.w, ann.bbox.h};
    j["iscrowd"] = ann.iscrowd ? 1 : 0;
    doc["annotations"].push_back(std::move(j));
  }
  doc["categories"] = ojson::array();
  for (const auto& [id, name] : index.categories) {
    ojson j;
    j["id"] = id;
    j["name"] = name;
    doc["categories"].push_back(std::move(j));
  }
  return doc.dump() + "\n";
}

}  // namespace longtail
