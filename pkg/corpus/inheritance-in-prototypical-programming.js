var Animal = function () { };

Animal.prototype.isAnAnimal = true;

var animal = new Animal();

var Dog = function () {};

// The prototype of Dog is set to a new Animal,
// so that future Dog objects will inherit from Animal.prototype
Dog.prototype = new Animal();

// We need to manually change Dog.prototype.constructor so that
// future Dog objects will have Dog as constructor
// (instead of Animal).
Dog.prototype.constructor = Dog;

// All Dog objects must share this property
Dog.prototype.isADog = true;

var dog = new Dog();
dog.isAnAnimal; // answers true
dog.isADog; // answers true
